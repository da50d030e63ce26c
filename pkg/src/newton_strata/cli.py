"""Command-line front end: search, analyze, qbg-dist, sample, poset.

Runs are reproducible: configs are flat TOML files, every report embeds the
sha256 of the config (or of the canonicalized arguments) plus the library
version, and JSON output is canonical (sorted keys, fixed separators), so
identical inputs produce byte-identical reports.

Exit codes: 0 success, 2 validation/config error, 3 fixture mismatch,
4 precision failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import __version__
from .affine import AffineElement
from .isocrystal import PrecisionLoss, SamplerConfig, estimate_generic_newton
from .newton import (
    DEFAULT_GAP_LIMIT,
    IsoClass,
    chain_length,
    hasse_covers,
    interval,
    maximal_chains,
)
from .qbg import qbg_for_rank
from .strata import TripleCandidate, analyze, load_fixture, search_triples
from .weyl import (
    CartanData,
    DiagramAutomorphism,
    WeylElement,
    cartan_type_a,
    parse_word,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_FIXTURE = 3
EXIT_PRECISION = 4


class FixtureMismatch(Exception):
    """Search result differs from the fixture."""


# ---------------------------------------------------------------------------
# Config handling
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    cartan: CartanData
    sigma: DiagramAutomorphism
    v: WeylElement
    w: WeylElement
    s: int
    mu: tuple[int, ...]
    superregular_bound: int
    sampler: SamplerConfig | None
    class_list: tuple[IsoClass, ...]
    sha256: str


def _parse_sigma(cartan: CartanData, text: str | None) -> DiagramAutomorphism:
    if text is None or not str(text).strip():
        return DiagramAutomorphism.identity(cartan)
    image = tuple(int(tok) for tok in str(text).split())
    return DiagramAutomorphism(cartan, image)


def load_config(path: str) -> RunConfig:
    blob = Path(path).read_bytes()
    digest = hashlib.sha256(blob).hexdigest()
    data = tomllib.loads(blob.decode("utf-8"))

    group = data.get("group", {})
    group_type = str(group.get("type", "A"))
    if group_type != "A":
        raise ValueError(f"unsupported group type {group_type!r}; only type A")
    rank = int(group["rank"])
    cartan = cartan_type_a(rank)
    n = cartan.n

    sigma = _parse_sigma(cartan, data.get("sigma"))
    v = WeylElement.from_word(parse_word(str(data["v"])), n)
    w = WeylElement.from_word(parse_word(str(data["w"])), n)
    s = int(data["s"])
    if s not in cartan.simple_root_indices:
        raise ValueError(f"s={s} is not a simple index for rank {rank}")
    mu = tuple(int(tok) for tok in str(data["mu"]).split())
    if len(mu) != n:
        raise ValueError(f"mu has {len(mu)} coordinates, expected {n}")
    bound = int(data["M"])

    sampler = None
    if "sampler" in data:
        sec = data["sampler"]
        sampler = SamplerConfig(
            p=int(sec["p"]),
            samples=int(sec["samples"]),
            rng_seed=int(sec["rng_seed"]),
            deg_cap=int(sec["deg_cap"]) if "deg_cap" in sec else None,
            stability_recheck=bool(sec.get("stability_recheck", False)),
        )

    class_list = tuple(IsoClass.from_string(str(entry))
                       for entry in data.get("class_list", []))
    return RunConfig(cartan, sigma, v, w, s, mu, bound, sampler,
                     class_list, digest)


def _args_digest(payload: dict) -> str:
    canon = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()


def _emit(fmt: str, digest: str, payload: dict, text: str) -> None:
    if fmt == "json":
        envelope = {"version": __version__, "config_sha256": digest,
                    "report": payload}
        sys.stdout.write(json.dumps(envelope, sort_keys=True,
                                    separators=(",", ":")) + "\n")
    else:
        header = f"# newton-strata {__version__}  config {digest[:12]}"
        body = text if text.endswith("\n") else text + "\n"
        sys.stdout.write(header + "\n" + body)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_search(args) -> int:
    if args.type != "A":
        raise ValueError(f"unsupported group type {args.type!r}; only type A")
    cartan = cartan_type_a(args.rank)
    sigma = _parse_sigma(cartan, args.sigma)
    digest = _args_digest({"cmd": "search", "type": args.type,
                           "rank": args.rank, "sigma": list(sigma.image)})
    triples = search_triples(cartan, sigma)

    if args.fixture:
        expected = load_fixture(args.fixture, cartan, sigma)
        got_keys = {t.key() for t in triples}
        want_keys = {t.key() for t in expected}
        if got_keys != want_keys:
            missing = want_keys - got_keys
            extra = got_keys - want_keys
            raise FixtureMismatch(
                f"search disagrees with {args.fixture}: "
                f"{len(missing)} missing, {len(extra)} unexpected")

    payload = {
        "type": args.type,
        "rank": args.rank,
        "sigma": list(sigma.image),
        "count": len(triples),
        "triples": [{"v": list(t.v.canonical_word()),
                     "w": list(t.w.canonical_word()),
                     "s": t.s} for t in triples],
        "fixture_checked": bool(args.fixture),
    }
    lines = [str(t) for t in triples]
    lines.append(f"{len(triples)} triple(s) for type {args.type} rank {args.rank}")
    if args.fixture:
        lines.append(f"fixture {args.fixture}: match")
    _emit(args.format, digest, payload, "\n".join(lines))
    return EXIT_OK


def cmd_analyze(args) -> int:
    config = load_config(args.config)
    cand = TripleCandidate(config.v, config.w, config.s, config.sigma)
    report = analyze(cand, config.mu, config.superregular_bound,
                     extra_classes=config.class_list,
                     gap_limit=args.gap_limit)
    _emit(args.format, config.sha256, report.to_json(), str(report))
    return EXIT_OK


def cmd_qbg_dist(args) -> int:
    if args.type != "A":
        raise ValueError(f"unsupported group type {args.type!r}; only type A")
    cartan = cartan_type_a(args.rank)
    n = cartan.n
    u = WeylElement.from_word(parse_word(args.src), n)
    v = WeylElement.from_word(parse_word(args.dst), n)
    graph = qbg_for_rank(args.rank)
    digest = _args_digest({"cmd": "qbg-dist", "type": args.type,
                           "rank": args.rank, "from": args.src, "to": args.dst})
    dist = graph.distance(u, v)
    weight = graph.min_path_weight(u, v)
    if args.dot:
        Path(args.dot).write_text(graph.to_dot())
    payload = {
        "type": args.type,
        "rank": args.rank,
        "from": list(u.canonical_word()),
        "to": list(v.canonical_word()),
        "distance": dist,
        "weight": list(weight),
    }
    text = (f"distance({u.word_str() or 'e'}, {v.word_str() or 'e'}) = {dist}\n"
            f"weight = {','.join(str(c) for c in weight)}")
    if args.dot:
        text += f"\ndot graph written to {args.dot}"
    _emit(args.format, digest, payload, text)
    return EXIT_OK


def cmd_sample(args) -> int:
    config = load_config(args.config)
    if config.sampler is None and args.prime is None:
        raise ValueError("config has no [sampler] section and no --prime given")
    sampler = config.sampler or SamplerConfig(p=args.prime, samples=1, rng_seed=0)
    overrides = {}
    if args.samples is not None:
        overrides["samples"] = args.samples
    if args.prime is not None:
        overrides["p"] = args.prime
    if args.seed is not None:
        overrides["rng_seed"] = args.seed
    if args.deg_cap is not None:
        overrides["deg_cap"] = args.deg_cap
    if overrides:
        sampler = replace(sampler, **overrides)

    x = AffineElement.from_normal(config.v, config.mu, config.w)
    report = estimate_generic_newton(x, sampler, threads=args.threads)
    maxima = " | ".join(str(c) for c in report.max_points)
    lines = [f"samples: {report.total}  discarded: {report.discarded}  "
             f"p: {report.p}  deg_cap: {report.deg_cap}  seed: {report.rng_seed}"]
    lines += [f"  {count:6d}  {cls}" for cls, count in report.histogram]
    lines.append(f"dominance-maximal: {maxima}")
    _emit(args.format, config.sha256, report.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_poset(args) -> int:
    a = IsoClass.from_string(args.src)
    b = IsoClass.from_string(args.dst)
    digest = _args_digest({"cmd": "poset", "from": args.src, "to": args.dst,
                           "gap_limit": args.gap_limit})
    classes = interval(a, b, limit=args.gap_limit)
    covers = hasse_covers(classes)
    chains = maximal_chains(a, b, limit=args.gap_limit)
    length = chain_length(a, b)
    payload = {
        "from": a.nu.json_entries(),
        "to": b.nu.json_entries(),
        "chain_length": length,
        "interval": [c.nu.json_entries() for c in classes],
        "cover_edges": [[low.nu.json_entries(), high.nu.json_entries()]
                        for low in classes for high in covers.get(low, [])],
        "chains": [[c.nu.json_entries() for c in chain] for chain in chains],
    }
    lines = [f"interval [{a}, {b}]: {len(classes)} classes, "
             f"chain length {length}, {len(chains)} maximal chain(s)"]
    lines += [f"  {c}" for c in classes]
    for i, chain in enumerate(chains):
        lines.append(f"chain {i + 1}: " + "  ->  ".join(str(c) for c in chain))
    _emit(args.format, digest, payload, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser and dispatch
# ---------------------------------------------------------------------------

def _add_format(sub) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text",
                     help="report format (default text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newton-strata",
        description="Newton strata of Iwahori double cosets: triple search, "
                    "stratum analysis, quantum Bruhat graph queries, Newton "
                    "poset queries, and a Monte-Carlo matrix oracle.")
    parser.add_argument("--version", action="version",
                        version=f"newton-strata {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("search", help="search all (v, w, s) triples")
    p.add_argument("--type", default="A")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--sigma", default=None,
                   help="diagram automorphism as space-separated images")
    p.add_argument("--fixture", default=None,
                   help="CSV fixture (v;w;s) to compare against")
    _add_format(p)
    p.set_defaults(func=cmd_search)

    p = subs.add_parser("analyze", help="full stratum analysis of one triple")
    p.add_argument("--config", required=True)
    p.add_argument("--gap-limit", type=int, default=DEFAULT_GAP_LIMIT)
    _add_format(p)
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("qbg-dist",
                        help="quantum Bruhat graph distance and weight")
    p.add_argument("--type", default="A")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--from", dest="src", required=True,
                   help="source element as a word of simple indices")
    p.add_argument("--to", dest="dst", required=True,
                   help="target element as a word of simple indices")
    p.add_argument("--dot", default=None, help="write the graph as DOT")
    _add_format(p)
    p.set_defaults(func=cmd_qbg_dist)

    p = subs.add_parser("sample", help="Monte-Carlo Newton point histogram")
    p.add_argument("--config", required=True)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--prime", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--deg-cap", type=int, default=None)
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: NEWTON_STRATA_THREADS or 1)")
    _add_format(p)
    p.set_defaults(func=cmd_sample)

    p = subs.add_parser("poset", help="Newton poset interval and chain queries")
    p.add_argument("--from", dest="src", required=True,
                   help="lower class, e.g. '149,74,0,-74,-149'")
    p.add_argument("--to", dest="dst", required=True,
                   help="upper class, e.g. '149,75,0,-75,-149'")
    p.add_argument("--gap-limit", type=int, default=DEFAULT_GAP_LIMIT)
    _add_format(p)
    p.set_defaults(func=cmd_poset)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FixtureMismatch as exc:
        print(f"fixture mismatch: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    except PrecisionLoss as exc:
        print(f"precision failure: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except KeyError as exc:
        print(f"config error: missing key {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
