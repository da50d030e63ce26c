"""Monte-Carlo oracle for generic Newton points of Iwahori double cosets.

Elements of GL_n over F_p((t)) are represented by truncated Laurent-series
matrices.  A sample is i1 * X * i2, where X is the monomial matrix of
x = v t^mu w and i1, i2 are random Iwahori elements (reduction mod t is
lower-triangular, diagonal entries are units).  The Newton point of a sample
is read off the lower convex hull of (k, val e_k) for the elementary
symmetric functions e_k of the matrix (sums of principal k-minors).

Exactness accounting instead of symbolic arithmetic:

* Every polynomial is truncated at exponent ``deg_cap``.  Entries of a
  product matrix are exact modulo t^(deg_cap+1); during the minor recursion
  a truncated exponent can propagate downward by at most n * |val_min|
  positions, so every stored coefficient with exponent at or below
  exact_floor := deg_cap - n * max(0, -val_min) is exact.  Valuations at or
  below the floor are certain; anything above it is only known to be
  "> exact_floor", and the hull logic raises PrecisionLoss whenever such an
  uncertain point could cut the hull.
* Convolutions run through real FFTs of power-of-two length.  All inputs
  are reduced mod p between levels, so every true product coefficient is an
  integer bounded by p^2 * window * n < 2^28, far inside float64's exact
  range; the rounding residual is asserted < 0.25 after every inverse FFT.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .affine import AffineElement
from .newton import IsoClass, NewtonPoint, dominance_lt

__all__ = [
    "PrecisionLoss",
    "SamplerConfig",
    "LaurentPolyMatrix",
    "matrix_of",
    "sample_iwahori",
    "multiply",
    "elementary_symmetric_valuations",
    "newton_point_of_matrix",
    "estimate_generic_newton",
    "SampleReport",
    "required_deg_cap",
]


class PrecisionLoss(RuntimeError):
    """Truncation precision was insufficient to certify a Newton point."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def required_deg_cap(mu, n: int) -> int:
    """Smallest supported truncation exponent for translation part mu."""
    peak = max((abs(int(c)) for c in mu), default=0)
    return 2 * n * peak + n


@dataclass(frozen=True)
class SamplerConfig:
    p: int
    samples: int
    rng_seed: int
    deg_cap: int | None = None  # None: required_deg_cap(mu, n) at run time
    stability_recheck: bool = False

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.samples < 1:
            raise ValueError("need at least one sample")
        if self.rng_seed < 0:
            raise ValueError("rng_seed must be non-negative")


def resolve_threads(threads: int | None) -> int:
    """Worker count: explicit argument, else NEWTON_STRATA_THREADS, else 1."""
    if threads is not None:
        if threads < 1:
            raise ValueError("threads must be positive")
        return threads
    env = os.environ.get("NEWTON_STRATA_THREADS", "").strip()
    return max(1, int(env)) if env else 1


# ---------------------------------------------------------------------------
# Truncated Laurent-polynomial matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaurentPolyMatrix:
    """n x n matrix of polynomials in t, exponents val_min..val_min+L-1, mod p.

    coeffs[i, j, k] is the coefficient of t^(val_min + k) in entry (i, j);
    every entry is exact modulo t^(deg_cap + 1) and zero above deg_cap.
    """

    coeffs: np.ndarray  # int64, shape (n, n, L), values in [0, p)
    val_min: int
    p: int
    deg_cap: int

    @property
    def n(self) -> int:
        return self.coeffs.shape[0]

    def entry_valuation(self, i: int, j: int) -> int | None:
        nz = np.nonzero(self.coeffs[i, j])[0]
        return None if nz.size == 0 else self.val_min + int(nz[0])

    def exact_floor(self) -> int:
        """Exponents at or below this are exact in any n-fold minor product."""
        return self.deg_cap - self.n * max(0, -self.val_min)


def matrix_of(x: AffineElement, p: int, deg_cap: int) -> LaurentPolyMatrix:
    """Monomial matrix of x = v t^mu w: column j holds t^(mu_{w(j)}) in row v(w(j))."""
    v, mu, w = x.normal_form()
    n = x.n
    val_min = min(0, min(mu))
    width = max(max(mu) - val_min + 1, 1)
    coeffs = np.zeros((n, n, width), dtype=np.int64)
    for j in range(1, n + 1):
        wj = w(j)
        coeffs[v(wj) - 1, j - 1, mu[wj - 1] - val_min] = 1
    return LaurentPolyMatrix(coeffs, val_min, p, deg_cap)


def sample_iwahori(n: int, p: int, deg_cap: int,
                   rng: np.random.Generator) -> LaurentPolyMatrix:
    """Random Iwahori element: unit diagonal, above-diagonal divisible by t."""
    cube = rng.integers(0, p, size=(n, n, deg_cap + 1), dtype=np.int64)
    units = rng.integers(1, p, size=n, dtype=np.int64)
    for i in range(n):
        cube[i, i, 0] = units[i]
        cube[i, i + 1:, 0] = 0
    return LaurentPolyMatrix(cube, 0, p, deg_cap)


def _fft_length(need: int) -> int:
    return 1 << max(1, (need - 1).bit_length())


def _exact_irfft(freq: np.ndarray, nf: int) -> np.ndarray:
    """Inverse rfft that must land on integers; asserts the residual."""
    real = np.fft.irfft(freq, nf, axis=-1)
    rounded = np.rint(real)
    residual = np.max(np.abs(real - rounded)) if real.size else 0.0
    assert residual < 0.25, f"FFT rounding residual {residual} too large"
    return rounded.astype(np.int64)


def multiply(a: LaurentPolyMatrix, b: LaurentPolyMatrix) -> LaurentPolyMatrix:
    """Matrix product with truncation at deg_cap, exact mod t^(deg_cap+1)."""
    assert a.p == b.p and a.deg_cap == b.deg_cap and a.n == b.n
    val_min = a.val_min + b.val_min
    width = a.deg_cap - val_min + 1
    nf = _fft_length(a.coeffs.shape[2] + b.coeffs.shape[2] - 1)
    fa = np.fft.rfft(a.coeffs, nf, axis=-1)
    fb = np.fft.rfft(b.coeffs, nf, axis=-1)
    prod = _exact_irfft(np.einsum("ikf,kjf->ijf", fa, fb), nf)
    np.remainder(prod, a.p, out=prod)
    out = np.zeros((a.n, a.n, width), dtype=np.int64)
    keep = min(width, prod.shape[2])
    out[:, :, :keep] = prod[:, :, :keep]
    return LaurentPolyMatrix(out, val_min, a.p, a.deg_cap)


# ---------------------------------------------------------------------------
# Elementary symmetric functions via memoized cofactor minors
# ---------------------------------------------------------------------------

def elementary_symmetric_valuations(m: LaurentPolyMatrix) -> list[int | None]:
    """[val e_0, ..., val e_n] of the matrix, mod p; None for zero-in-window.

    e_k is the sum of all k x k principal minors.  Minors are expanded along
    their first row; sub-determinants det(rows, cols) are memoized across
    all principal subsets, and every product runs through one shared FFT
    length with frequency-domain accumulation of the cofactor sum.
    """
    n, p, deg_cap, lo = m.n, m.p, m.deg_cap, m.val_min
    worst = 2 * deg_cap - n * lo + 1 if lo < 0 else 2 * deg_cap + 1
    nf = _fft_length(worst)
    padded = np.zeros((n, n, nf), dtype=np.int64)
    padded[:, :, :m.coeffs.shape[2]] = m.coeffs
    entry_freq = np.fft.rfft(padded, nf, axis=-1)

    memo: dict = {}

    def det(rows: tuple[int, ...], cols: tuple[int, ...]):
        """-> (coeffs int64[nf], val_min, freq); exact mod t^(deg_cap+1)."""
        key = (rows, cols)
        if key in memo:
            return memo[key]
        if len(rows) == 1:
            value = (padded[rows[0], cols[0]], lo, entry_freq[rows[0], cols[0]])
        else:
            r0, rest = rows[0], rows[1:]
            acc = np.zeros(nf // 2 + 1, dtype=np.complex128)
            sub_lo = None
            for pos, c in enumerate(cols):
                sub = det(rest, cols[:pos] + cols[pos + 1:])
                sub_lo = sub[1]
                term = entry_freq[r0, c] * sub[2]
                acc += term if pos % 2 == 0 else -term
            coeffs = _exact_irfft(acc, nf)
            np.remainder(coeffs, p, out=coeffs)
            base = lo + sub_lo
            coeffs[deg_cap - base + 1:] = 0
            value = (coeffs, base, np.fft.rfft(coeffs, nf))
        memo[key] = value
        return value

    vals: list[int | None] = [0]
    for k in range(1, n + 1):
        total = np.zeros(nf, dtype=np.int64)
        base = k * lo
        for subset in itertools.combinations(range(n), k):
            coeffs, sub_base, _ = det(subset, subset)
            assert sub_base == base
            total += coeffs
        total %= p
        nz = np.nonzero(total)[0]
        vals.append(None if nz.size == 0 else base + int(nz[0]))
    return vals


# ---------------------------------------------------------------------------
# Newton point of one sample
# ---------------------------------------------------------------------------

def _lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Lower convex hull vertices, left to right (monotone-chain)."""
    hull: list[tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _hull_height(hull: list[tuple[int, int]], x: int) -> Fraction:
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        if x1 <= x <= x2:
            return Fraction(y1) + Fraction(y2 - y1, x2 - x1) * (x - x1)
    raise AssertionError(f"abscissa {x} outside hull span")


def newton_point_of_matrix(m: LaurentPolyMatrix) -> IsoClass:
    """Newton point from the hull of (k, val e_k); raises PrecisionLoss.

    Valuations at or below m.exact_floor() are certain.  A valuation above
    the floor (or an e_k that vanished in the stored window) only says
    "val > floor"; such a point is safe to drop exactly when the hull of the
    certain points stays at or below the floor beneath it, so that the true
    point cannot cut the hull.  Hull vertices are additionally required to
    clear the floor by a margin of n as a guard band.
    """
    n = m.n
    floor = m.exact_floor()
    vals = elementary_symmetric_valuations(m)
    assert vals[0] == 0
    if vals[n] is None or vals[n] > floor:
        raise PrecisionLoss("determinant valuation exceeds the exact window")
    certain = [(k, val) for k, val in enumerate(vals)
               if val is not None and val <= floor]
    uncertain = [k for k, val in enumerate(vals)
                 if val is None or val > floor]
    hull = _lower_hull(certain)
    if any(y > floor - n for _, y in hull):
        raise PrecisionLoss(
            f"hull vertex within the guard band of exact_floor={floor}")
    for k in uncertain:
        if _hull_height(hull, k) > floor:
            raise PrecisionLoss(
                f"valuation of e_{k} exceeds exact_floor={floor} but could "
                "still cut the hull")
    slopes: list[Fraction] = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes.extend([Fraction(y2 - y1, x2 - x1)] * (x2 - x1))
    slopes.reverse()  # hull slopes increase; Newton points are non-increasing
    return IsoClass(NewtonPoint(tuple(slopes)))


# ---------------------------------------------------------------------------
# The Monte-Carlo estimate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SampleReport:
    histogram: tuple[tuple[IsoClass, int], ...]  # count desc, then slope order
    max_points: tuple[IsoClass, ...]             # dominance-maximal observed
    total: int
    discarded: int
    p: int
    deg_cap: int
    exact_floor: int
    rng_seed: int

    def count_of(self, iso: IsoClass) -> int:
        for cls, count in self.histogram:
            if cls == iso:
                return count
        return 0

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "deg_cap": self.deg_cap,
            "exact_floor": self.exact_floor,
            "rng_seed": self.rng_seed,
            "total": self.total,
            "discarded": self.discarded,
            "histogram": [
                {"nu": cls.nu.json_entries(), "count": count}
                for cls, count in self.histogram
            ],
            "max_points": [cls.nu.json_entries() for cls in self.max_points],
        }


def _stream(seed: int, index: int) -> np.random.Generator:
    """Independent Philox stream per sample: counter blocks 2^64 apart."""
    bitgen = np.random.Philox(key=[seed & (2 ** 64 - 1), 0],
                              counter=[0, index, 0, 0])
    return np.random.Generator(bitgen)


def _one_sample(x_matrix: LaurentPolyMatrix, seed: int, index: int,
                recheck: bool) -> IsoClass | None:
    """Newton point of sample `index`, or None if it had to be discarded."""
    rng = _stream(seed, index)
    n, p, deg_cap = x_matrix.n, x_matrix.p, x_matrix.deg_cap
    i1 = sample_iwahori(n, p, deg_cap, rng)
    i2 = sample_iwahori(n, p, deg_cap, rng)
    try:
        nu = newton_point_of_matrix(multiply(multiply(i1, x_matrix), i2))
    except PrecisionLoss:
        return None
    if recheck:
        # Same Iwahori factors, working precision doubled: the certified
        # Newton point must not move.  A change is a hard failure.
        doubled = [replace(mat, deg_cap=2 * deg_cap)
                   for mat in (i1, x_matrix, i2)]
        try:
            redone = newton_point_of_matrix(
                multiply(multiply(doubled[0], doubled[1]), doubled[2]))
        except PrecisionLoss:
            return None
        if redone != nu:
            raise PrecisionLoss(
                f"sample {index}: Newton point changed when deg_cap doubled "
                f"({nu} vs {redone})")
    return nu


def estimate_generic_newton(x: AffineElement, config: SamplerConfig,
                            threads: int | None = None) -> SampleReport:
    """Sample Newton points of the double coset of x.

    Deterministic for a fixed (rng_seed, p, deg_cap, samples) regardless of
    the thread count: sample i uses its own counter-offset Philox stream.
    Raises PrecisionLoss if more than 10% of samples had to be discarded,
    and ValueError if deg_cap is below the supported floor.
    """
    _, mu, _ = x.normal_form()
    n = x.n
    floor_cap = required_deg_cap(mu, n)
    deg_cap = config.deg_cap if config.deg_cap is not None else floor_cap
    if deg_cap < floor_cap:
        raise ValueError(
            f"deg_cap={deg_cap} is below the supported floor {floor_cap} "
            f"for mu={mu}")
    kappa = x.kappa()
    x_matrix = matrix_of(x, config.p, deg_cap)
    recheck_every = 20  # 5% of samples when stability_recheck is set

    def run(i: int) -> IsoClass | None:
        recheck = config.stability_recheck and i % recheck_every == 0
        return _one_sample(x_matrix, config.rng_seed, i, recheck)

    worker_count = resolve_threads(threads)
    if worker_count == 1:
        results = [run(i) for i in range(config.samples)]
    else:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=worker_count) as pool:
            results = list(pool.map(run, range(config.samples)))

    counts: dict[IsoClass, int] = {}
    discarded = 0
    for res in results:
        if res is None:
            discarded += 1
        else:
            assert res.kappa == kappa, \
                f"sampled kappa {res.kappa} differs from kappa(x) = {kappa}"
            counts[res] = counts.get(res, 0) + 1
    if discarded > config.samples // 10:
        raise PrecisionLoss(
            f"{discarded}/{config.samples} samples discarded; "
            "raise deg_cap for this mu")
    observed = list(counts)
    max_points = tuple(sorted(
        (c for c in observed
         if not any(dominance_lt(c, other) for other in observed)),
        key=lambda c: c.nu.partial_sums()))
    histogram = tuple(sorted(counts.items(),
                             key=lambda kv: (-kv[1], kv[0].nu.partial_sums())))
    return SampleReport(histogram=histogram, max_points=max_points,
                        total=config.samples, discarded=discarded,
                        p=config.p, deg_cap=deg_cap,
                        exact_floor=x_matrix.exact_floor(),
                        rng_seed=config.rng_seed)
