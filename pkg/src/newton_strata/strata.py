"""Newton strata of Iwahori double cosets in the superregular regime.

The pipeline: a triple (v, w, s) passing check_triple_conditions determines,
for every dominant superregular mu, an element x = v t^mu w whose stratum
data is computed exactly from finite combinatorics: generic Newton points via
quantum-Bruhat-graph path weights, virtual dimensions, membership of classes
in B(G)_x, dimensions dim X_x(b), component codimensions of the generic-class
boundary, and the maximal chains between the two distinguished Newton points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .affine import AffineElement, eta, is_superregular, mult_simple
from .newton import (
    IsoClass,
    NotComparable,
    basic_class,
    chain_length,
    defect,
    dominance_leq,
    dominance_max,
    interval,
    maximal_chains,
    DEFAULT_GAP_LIMIT,
)
from .qbg import QuantumBruhatGraph, qbg_for_rank
from .weyl import (
    CartanData,
    DiagramAutomorphism,
    WeylElement,
    has_full_sigma_support,
    parse_word,
)


class NotSuperregular(ValueError):
    """The translation part is not superregular for the supplied bound."""


class TwistedUnsupported(ValueError):
    """Generic Newton points are only implemented for sigma = identity."""


class KappaMismatch(ValueError):
    """A queried class has a different kappa than the element."""


class IncomparableTops(ValueError):
    """The two distinguished Newton points are not dominance-comparable."""


def _as_int(value: Fraction, what: str) -> int:
    assert value.denominator == 1, f"{what} = {value} is not an integer"
    return int(value)


# ---------------------------------------------------------------------------
# Triples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TripleCandidate:
    """(v, w, s) with a diagram automorphism; mu stays abstract."""

    v: WeylElement
    w: WeylElement
    s: int
    sigma: DiagramAutomorphism

    def sort_key(self):
        return (self.v.canonical_word(), self.w.canonical_word(), self.s)

    def key(self):
        return (self.v.perm, self.w.perm, self.s)

    def __str__(self) -> str:
        return f"v={self.v.word_str()}  w={self.w.word_str()}  s={self.s}"


@dataclass(frozen=True)
class TripleConditionReport:
    length_sv_drops: bool
    length_ws_rises: bool
    length_gap: bool
    full_support_wv: bool
    full_support_wsv: bool
    cordial_left: bool
    cordial_both: bool

    @property
    def passed(self) -> bool:
        return all((self.length_sv_drops, self.length_ws_rises, self.length_gap,
                    self.full_support_wv, self.full_support_wsv,
                    self.cordial_left, self.cordial_both))


def check_triple_conditions(cand: TripleCandidate,
                            graph: QuantumBruhatGraph | None = None) -> TripleConditionReport:
    """The static conditions on (v, w, s); mu-independent.

    With wt = sigma^{-1}(w): length conditions ℓ(sv) < ℓ(v), ℓ(w sigma(s)) > ℓ(w),
    ℓ(wt s v) < ℓ(wt v) - 1; full sigma-support of wt v and wt s v; and the two
    cordiality criteria dist(w^{-1}, sv) = ℓ(wt s v) and
    dist(sigma(s) w^{-1}, sv) = ℓ(wt v) in the quantum Bruhat graph.
    """
    v, w, s, sigma = cand.v, cand.w, cand.s, cand.sigma
    n = v.n
    if graph is None:
        graph = qbg_for_rank(n - 1)
    s_elt = WeylElement.simple(s, n)
    sig_s_elt = WeylElement.simple(sigma.index(s), n)
    wt = sigma.inverse()(w)
    sv = s_elt * v
    wtv = wt * v
    wtsv = wt * sv
    winv = w.inverse()
    return TripleConditionReport(
        length_sv_drops=sv.length() < v.length(),
        length_ws_rises=(w * sig_s_elt).length() > w.length(),
        length_gap=wtsv.length() < wtv.length() - 1,
        full_support_wv=has_full_sigma_support(wtv, sigma),
        full_support_wsv=has_full_sigma_support(wtsv, sigma),
        cordial_left=graph.distance(winv, sv) == wtsv.length(),
        cordial_both=graph.distance(sig_s_elt * winv, sv) == wtv.length(),
    )


def search_triples(cartan: CartanData,
                   sigma: DiagramAutomorphism | None = None,
                   graph: QuantumBruhatGraph | None = None) -> list[TripleCandidate]:
    """All (v, w, s) passing check_triple_conditions, in canonical order."""
    if sigma is None:
        sigma = DiagramAutomorphism.identity(cartan)
    if graph is None:
        graph = qbg_for_rank(cartan.rank)
    n = cartan.n
    elements = cartan.weyl_elements()
    simples = {i: WeylElement.simple(i, n) for i in cartan.simple_root_indices}
    sigma_inv = sigma.inverse()
    identity_sigma = sigma.is_identity()

    # cheap per-element tables
    sv_table = {(i, v.perm): simples[i] * v
                for i in simples for v in elements}
    found: list[TripleCandidate] = []
    for w in elements:
        wt = w if identity_sigma else sigma_inv(w)
        winv = w.inverse()
        for v in elements:
            wtv = wt * v
            len_wtv = wtv.length()
            supp_wtv_full = None  # computed lazily; shared across s
            for s in cartan.simple_root_indices:
                # ℓ(sv) < ℓ(v) and ℓ(w sigma(s)) > ℓ(w), as O(1) descent tests
                vinv = v.inverse()
                if vinv.perm[s - 1] < vinv.perm[s]:
                    continue
                sig_s = sigma.index(s)
                if w.perm[sig_s - 1] > w.perm[sig_s]:
                    continue
                sv = sv_table[(s, v.perm)]
                wtsv = wt * sv
                if wtsv.length() >= len_wtv - 1:
                    continue
                if supp_wtv_full is None:
                    supp_wtv_full = has_full_sigma_support(wtv, sigma)
                if not supp_wtv_full:
                    break  # independent of s
                if not has_full_sigma_support(wtsv, sigma):
                    continue
                if graph.distance(winv, sv) != wtsv.length():
                    continue
                if graph.distance(simples[sig_s] * winv, sv) != len_wtv:
                    continue
                cand = TripleCandidate(v, w, s, sigma)
                assert check_triple_conditions(cand, graph).passed
                found.append(cand)
    found.sort(key=TripleCandidate.sort_key)
    return found


def load_fixture(path, cartan: CartanData,
                 sigma: DiagramAutomorphism | None = None) -> list[TripleCandidate]:
    """Read a 'v;w;s' fixture of index words (one triple per line)."""
    if sigma is None:
        sigma = DiagramAutomorphism.identity(cartan)
    triples = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.lower().startswith("v;"):
            continue
        v_word, w_word, s_tok = (fieldtext.strip() for fieldtext in line.split(";"))
        triples.append(TripleCandidate(
            WeylElement.from_word(parse_word(v_word), cartan.n),
            WeylElement.from_word(parse_word(w_word), cartan.n),
            int(s_tok),
            sigma,
        ))
    return triples


# ---------------------------------------------------------------------------
# Generic Newton points, cordiality, virtual dimension
# ---------------------------------------------------------------------------

def generic_newton_point(x: AffineElement, sigma: DiagramAutomorphism,
                         graph: QuantumBruhatGraph | None = None,
                         superregular_bound: int | None = None) -> IsoClass:
    """Generic Newton point of the double coset of x (split, superregular).

    For x = v t^mu w this is mu minus the shortest-path weight from w^{-1}
    to v in the quantum Bruhat graph; superregularity makes the difference
    already dominant, which is asserted.
    """
    if not sigma.is_identity():
        raise TwistedUnsupported("generic Newton points require sigma = identity")
    v, mu, w = x.normal_form()
    if superregular_bound is not None and not is_superregular(x, superregular_bound):
        raise NotSuperregular(
            f"mu={mu} is not superregular beyond {superregular_bound}")
    if graph is None:
        graph = qbg_for_rank(x.n - 1)
    weight = graph.min_path_weight(w.inverse(), v)
    nu = tuple(m - c for m, c in zip(mu, weight))
    if any(nu[k] < nu[k + 1] for k in range(len(nu) - 1)):
        raise NotSuperregular(
            f"mu - path weight = {nu} is not dominant; mu lacks regularity")
    return IsoClass.from_slopes(nu)


def is_cordial(x: AffineElement, sigma: DiagramAutomorphism,
               graph: QuantumBruhatGraph | None = None,
               superregular_bound: int | None = None) -> bool:
    """QBG cordiality criterion dist(w^{-1}, v) = ℓ(sigma^{-1}(w) v).

    Cross-checked (when the generic class has defect 0) against the length
    identity ℓ(x) - ℓ(eta(x)) = ⟨2rho, nu_x⟩ - defect(b_x).
    """
    if not sigma.is_identity():
        raise TwistedUnsupported("cordiality checks require sigma = identity")
    if graph is None:
        graph = qbg_for_rank(x.n - 1)
    v, _, w = x.normal_form()
    eta_x = sigma.inverse()(w) * v
    by_distance = graph.distance(w.inverse(), v) == eta_x.length()
    b = generic_newton_point(x, sigma, graph, superregular_bound)
    if defect(b) == 0:
        lhs = x.length() - eta_x.length()
        rhs = x.cartan.pairing(x.cartan.two_rho, b.nu.slopes) - defect(b)
        assert by_distance == (lhs == rhs), \
            "cordiality criteria disagree: QBG distance vs length identity"
    return by_distance


def virtual_dimension(x: AffineElement, b: IsoClass,
                      sigma: DiagramAutomorphism) -> Fraction:
    """d_x(b) = (ℓ(x) + ℓ(eta(x)) - defect(b) - ⟨2rho, nu_b⟩) / 2, exact."""
    if b.n != x.n:
        raise KappaMismatch("class and element live in different groups")
    if b.kappa != x.kappa():
        raise KappaMismatch(
            f"class has kappa={b.kappa}, element has kappa={x.kappa()}")
    two_rho_nu = x.cartan.pairing(x.cartan.two_rho, b.nu.slopes)
    return Fraction(x.length() + eta(x, sigma).length() - defect(b) - two_rho_nu, 2)


# ---------------------------------------------------------------------------
# Full analysis of one triple
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassRecord:
    iso: IsoClass
    in_left: bool          # b <= b_{sx}
    in_both: bool          # b <= b_{sx sigma(s)}
    in_bg_x: bool          # membership in B(G)_x
    in_noneq: bool         # membership in the non-equal-dimension set
    d_left: Fraction       # d_{sx}(b)
    d_both: Fraction       # d_{sx sigma(s)}(b)
    dim_xx: int | None     # dim X_x(b), None outside B(G)_x
    codims: tuple[int, ...] | None  # component codimensions in the closure

    def to_json(self) -> dict:
        return {
            "nu": self.iso.nu.json_entries(),
            "kappa": self.iso.kappa,
            "defect": defect(self.iso),
            "in_left_set": self.in_left,
            "in_both_set": self.in_both,
            "in_bg_x": self.in_bg_x,
            "in_noneq": self.in_noneq,
            "d_left": [self.d_left.numerator, self.d_left.denominator],
            "d_both": [self.d_both.numerator, self.d_both.denominator],
            "dim_xx": self.dim_xx,
            "codims": list(self.codims) if self.codims is not None else None,
        }


@dataclass(frozen=True)
class AnalysisReport:
    candidate: TripleCandidate
    mu: tuple[int, ...]
    superregular_bound: int
    length_x: int
    length_sx: int
    length_sxs: int
    eta_length_x: int
    eta_length_sx: int
    eta_length_sxs: int
    nu_x: IsoClass
    nu_sx: IsoClass
    nu_sxs: IsoClass
    b_x: IsoClass
    kappa: int
    cordial_x: bool
    cordial_sx: bool
    cordial_sxs: bool
    d_difference: int
    records: tuple[ClassRecord, ...]
    chains: tuple[tuple[IsoClass, ...], ...]
    chain_len: int
    noneq_certificate: bool
    conditions: TripleConditionReport

    def to_json(self) -> dict:
        return {
            "triple": {
                "v": list(self.candidate.v.canonical_word()),
                "w": list(self.candidate.w.canonical_word()),
                "s": self.candidate.s,
                "sigma": list(self.candidate.sigma.image),
            },
            "mu": list(self.mu),
            "superregular_bound": self.superregular_bound,
            "kappa": self.kappa,
            "lengths": {"x": self.length_x, "sx": self.length_sx, "sxs": self.length_sxs},
            "eta_lengths": {"x": self.eta_length_x, "sx": self.eta_length_sx,
                            "sxs": self.eta_length_sxs},
            "nu_x": self.nu_x.nu.json_entries(),
            "nu_sx": self.nu_sx.nu.json_entries(),
            "nu_sxs": self.nu_sxs.nu.json_entries(),
            "b_x": self.b_x.nu.json_entries(),
            "cordial": {"x": self.cordial_x, "sx": self.cordial_sx, "sxs": self.cordial_sxs},
            "d_difference": self.d_difference,
            "classes": [r.to_json() for r in self.records],
            "chains": [[c.nu.json_entries() for c in chain] for chain in self.chains],
            "chain_length": self.chain_len,
            "noneq_certificate": self.noneq_certificate,
            "conditions": {
                "length_sv_drops": self.conditions.length_sv_drops,
                "length_ws_rises": self.conditions.length_ws_rises,
                "length_gap": self.conditions.length_gap,
                "full_support_wv": self.conditions.full_support_wv,
                "full_support_wsv": self.conditions.full_support_wsv,
                "cordial_left": self.conditions.cordial_left,
                "cordial_both": self.conditions.cordial_both,
            },
        }

    def __str__(self) -> str:
        lines = [
            f"triple: {self.candidate}",
            f"mu = {','.join(str(c) for c in self.mu)}  (superregular beyond {self.superregular_bound})",
            f"lengths: l(x)={self.length_x}  l(sx)={self.length_sx}  l(sxs)={self.length_sxs}",
            f"generic Newton points: nu_x={self.nu_x}  nu_sx={self.nu_sx}  nu_sxs={self.nu_sxs}",
            f"b_x = {self.b_x}   kappa = {self.kappa}",
            f"cordial: x={self.cordial_x} sx={self.cordial_sx} sxs={self.cordial_sxs}",
            f"non-empty non-equal-dimension set: {self.noneq_certificate}",
            f"maximal chains nu_sxs -> nu_x: {len(self.chains)} of length {self.chain_len}",
            "classes:",
        ]
        for r in self.records:
            if r.in_bg_x:
                detail = f"dim X_x = {r.dim_xx}, codims {sorted(r.codims)}"
            else:
                detail = "not in B(G)_x"
            tag = "noneq" if r.in_noneq else ("in" if r.in_bg_x else "out")
            lines.append(f"  [{tag:5}] nu = {r.iso}: {detail}")
        return "\n".join(lines)


def analyze(cand: TripleCandidate, mu, superregular_bound: int,
            extra_classes=(), graph: QuantumBruhatGraph | None = None,
            gap_limit: int = DEFAULT_GAP_LIMIT) -> AnalysisReport:
    """Full stratum analysis of x = v t^mu w for one conforming triple."""
    sigma = cand.sigma
    n = cand.v.n
    cartan = AffineElement.identity(n).cartan
    if graph is None:
        graph = qbg_for_rank(n - 1)

    mu = tuple(int(c) for c in mu)
    if len(mu) != n:
        raise ValueError(f"mu has {len(mu)} coordinates, expected {n}")
    if any(mu[k] < mu[k + 1] for k in range(n - 1)):
        raise ValueError(f"mu={mu} must be dominant (non-increasing)")

    conditions = check_triple_conditions(cand, graph)
    if not conditions.passed:
        raise ValueError(f"triple {cand} fails the required conditions: {conditions}")

    x = AffineElement.from_normal(cand.v, mu, cand.w)
    if not is_superregular(x, superregular_bound):
        raise NotSuperregular(
            f"mu={mu} is not superregular beyond {superregular_bound}")
    nf = x.normal_form()
    assert (nf[0].perm, nf[1], nf[2].perm) == (cand.v.perm, mu, cand.w.perm), \
        "normal form does not reproduce the input triple"

    sx, delta_left = mult_simple("left", cand.s, x)
    assert delta_left == -1
    sxs, delta_right = mult_simple("right", cand.s, sx, sigma)
    assert delta_right == -1
    assert sxs.length() == x.length() - 2, "conjugation must shorten by exactly 2"

    nu_x = generic_newton_point(x, sigma, graph, superregular_bound)
    nu_sx = generic_newton_point(sx, sigma, graph, superregular_bound)
    nu_sxs = generic_newton_point(sxs, sigma, graph, superregular_bound)
    b_x = dominance_max(nu_sx, nu_sxs, error=IncomparableTops)
    assert b_x == nu_x, "generic class of x must be the larger of the two tops"

    kappa = x.kappa()
    base_classes = [nu_sxs, nu_sx, nu_x, basic_class(n, kappa)]
    base_classes += interval(nu_sxs, b_x, limit=gap_limit)
    for extra in extra_classes:
        if extra.n != n or extra.kappa != kappa:
            raise KappaMismatch(
                f"queried class {extra} has kappa {extra.kappa}, element has {kappa}")
        base_classes.append(extra)
    seen, classes = set(), []
    for c in base_classes:
        if c not in seen:
            seen.add(c)
            classes.append(c)
    classes.sort(key=lambda c: c.nu.partial_sums())

    two_rho = cartan.two_rho
    len_x = x.length()
    records = []
    differences = set()
    for b in classes:
        d_left = virtual_dimension(sx, b, sigma)
        d_both = virtual_dimension(sxs, b, sigma)
        differences.add(d_both - d_left)
        in_left = dominance_leq(b, nu_sx)
        in_both = dominance_leq(b, nu_sxs)
        in_bg_x = in_left or in_both
        in_noneq = in_left and in_both
        if in_bg_x:
            two_rho_nu = _as_int(cartan.pairing(two_rho, b.nu.slopes), "⟨2rho, nu⟩")
            dim = _as_int((d_both if in_both else d_left) + 1, "dim X_x(b)")
            if in_noneq:
                codims = (len_x - two_rho_nu - _as_int(d_both + 1, "dim") ,
                          len_x - two_rho_nu - _as_int(d_left + 1, "dim"))
            else:
                codims = (len_x - two_rho_nu - dim,)
            codims = tuple(sorted(set(codims)))
            assert dim == len_x - two_rho_nu - min(codims), "dim/codim bookkeeping"
        else:
            dim, codims = None, None
        records.append(ClassRecord(b, in_left, in_both, in_bg_x, in_noneq,
                                   d_left, d_both, dim, codims))
    assert len(differences) == 1, "d_both - d_left must not depend on the class"
    d_difference = _as_int(differences.pop(), "d difference")
    assert d_difference > 0, "d_both - d_left must be positive"

    chains = tuple(tuple(chain) for chain in maximal_chains(nu_sxs, b_x, limit=gap_limit))

    return AnalysisReport(
        candidate=cand,
        mu=mu,
        superregular_bound=superregular_bound,
        length_x=len_x,
        length_sx=sx.length(),
        length_sxs=sxs.length(),
        eta_length_x=eta(x, sigma).length(),
        eta_length_sx=eta(sx, sigma).length(),
        eta_length_sxs=eta(sxs, sigma).length(),
        nu_x=nu_x,
        nu_sx=nu_sx,
        nu_sxs=nu_sxs,
        b_x=b_x,
        kappa=kappa,
        cordial_x=is_cordial(x, sigma, graph, superregular_bound),
        cordial_sx=is_cordial(sx, sigma, graph, superregular_bound),
        cordial_sxs=is_cordial(sxs, sigma, graph, superregular_bound),
        d_difference=d_difference,
        records=tuple(records),
        chains=chains,
        chain_len=chain_length(nu_sxs, b_x),
        noneq_certificate=any(r.in_noneq for r in records),
        conditions=conditions,
    )
