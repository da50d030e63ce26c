"""The Newton poset of GL_n: Newton points, dominance, defect, chains.

A Newton point is a non-increasing vector of rationals whose partial sums are
integral at every slope change (and at n).  Equivalently: a concave polygon
from (0,0) to (n, kappa) with lattice break points.  Dominance compares
partial sums pointwise with equality at n; defect counts n minus the number
of simple isocrystal summands; the length of every maximal chain in an
interval is given by a closed formula validated against brute-force Hasse
enumeration in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class MalformedSlopes(ValueError):
    """Slope multiplicities violate break-point integrality."""


class NotComparable(ValueError):
    """The two classes are not related by dominance."""


class LimitExceeded(ValueError):
    """Interval enumeration was asked to cross a larger gap than allowed."""


DEFAULT_GAP_LIMIT = 24


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read slope from {value!r}")


@dataclass(frozen=True)
class NewtonPoint:
    """Non-increasing rational slope vector with integral break points."""

    slopes: tuple[Fraction, ...]

    def __post_init__(self):
        slopes = tuple(_as_fraction(s) for s in self.slopes)
        object.__setattr__(self, "slopes", slopes)
        if not slopes:
            raise ValueError("empty slope vector")
        for k in range(len(slopes) - 1):
            if slopes[k] < slopes[k + 1]:
                raise ValueError(f"slopes must be non-increasing: {slopes}")
        sums = self.partial_sums()
        for k in range(1, len(slopes)):
            if slopes[k - 1] != slopes[k] and sums[k - 1].denominator != 1:
                raise MalformedSlopes(
                    f"partial sum {sums[k - 1]} at break point {k} is not integral: "
                    f"{slopes}")
        if sums[-1].denominator != 1:
            raise MalformedSlopes(f"total {sums[-1]} is not integral: {slopes}")

    @property
    def n(self) -> int:
        return len(self.slopes)

    def partial_sums(self) -> tuple[Fraction, ...]:
        out, acc = [], Fraction(0)
        for s in self.slopes:
            acc += s
            out.append(acc)
        return tuple(out)

    def total(self) -> int:
        return int(self.partial_sums()[-1])

    def is_integral(self) -> bool:
        return all(s.denominator == 1 for s in self.slopes)

    @classmethod
    def from_string(cls, text: str) -> "NewtonPoint":
        return cls(tuple(Fraction(tok.strip()) for tok in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.slopes)

    def json_entries(self) -> list[list[int]]:
        return [[s.numerator, s.denominator] for s in self.slopes]


@dataclass(frozen=True)
class IsoClass:
    """A sigma-conjugacy class of GL_n: Newton point plus integer kappa."""

    nu: NewtonPoint

    @property
    def kappa(self) -> int:
        return self.nu.total()

    @property
    def n(self) -> int:
        return self.nu.n

    @classmethod
    def from_slopes(cls, slopes) -> "IsoClass":
        return cls(NewtonPoint(tuple(slopes)))

    @classmethod
    def from_string(cls, text: str) -> "IsoClass":
        return cls(NewtonPoint.from_string(text))

    def __str__(self) -> str:
        return str(self.nu)


def basic_class(n: int, kappa: int) -> IsoClass:
    """The minimal class with the given kappa: all slopes kappa/n."""
    return IsoClass.from_slopes((Fraction(kappa, n),) * n)


# ---------------------------------------------------------------------------
# Dominance and defect
# ---------------------------------------------------------------------------

def dominance_leq(a: IsoClass, b: IsoClass) -> bool:
    """a <= b iff partial sums never exceed b's and agree at n (same kappa)."""
    if a.n != b.n:
        raise ValueError("comparing Newton points of different groups")
    pa, pb = a.nu.partial_sums(), b.nu.partial_sums()
    if pa[-1] != pb[-1]:
        return False
    return all(x <= y for x, y in zip(pa, pb))


def dominance_lt(a: IsoClass, b: IsoClass) -> bool:
    return a != b and dominance_leq(a, b)


def dominance_max(a: IsoClass, b: IsoClass, error=NotComparable) -> IsoClass:
    if dominance_leq(a, b):
        return b
    if dominance_leq(b, a):
        return a
    raise error(f"{a} and {b} are not comparable")


def defect_of_slopes(slopes) -> int:
    """n minus the number of simple summands read off the slope runs."""
    slopes = tuple(_as_fraction(s) for s in slopes)
    n = len(slopes)
    summands = 0
    k = 0
    while k < n:
        j = k
        while j < n and slopes[j] == slopes[k]:
            j += 1
        run, q = j - k, slopes[k].denominator
        if run % q:
            raise MalformedSlopes(
                f"slope {slopes[k]} occurs {run} times, not a multiple of {q}")
        summands += run // q
        k = j
    return n - summands


def defect(b: IsoClass) -> int:
    return defect_of_slopes(b.nu.slopes)


def rho_pairing(n: int, vec) -> Fraction:
    """⟨rho, vec⟩ with rho = half-sum of positive roots."""
    two_rho = [n - 1 - 2 * k for k in range(n)]
    return sum(Fraction(r) * _as_fraction(v) for r, v in zip(two_rho, vec)) / 2


def chain_length(a: IsoClass, b: IsoClass) -> int:
    """Common length of every maximal chain from a to b in the Newton poset."""
    if not dominance_leq(a, b):
        raise NotComparable(f"{a} is not below {b}")
    gap = tuple(x - y for x, y in zip(b.nu.slopes, a.nu.slopes))
    value = rho_pairing(a.n, gap) + Fraction(defect(a) - defect(b), 2)
    assert value.denominator == 1 and value >= 0, \
        f"chain length formula produced {value} for {a} -> {b}"
    return int(value)


# ---------------------------------------------------------------------------
# Interval enumeration and maximal chains
# ---------------------------------------------------------------------------

def interval(a: IsoClass, b: IsoClass, limit: int = DEFAULT_GAP_LIMIT) -> list[IsoClass]:
    """All classes c with a <= c <= b, sorted by partial sums (a first, b last).

    Enumerates concave lattice-vertex chains from (0,0) to (n, kappa) pinched
    between the polygons of a and b.  Checking the bounds at integer abscissae
    suffices because all three polygons only kink at integers.
    """
    if not dominance_leq(a, b):
        raise NotComparable(f"{a} is not below {b}")
    gap = tuple(x - y for x, y in zip(b.nu.slopes, a.nu.slopes))
    if rho_pairing(a.n, gap) > limit:
        raise LimitExceeded(
            f"interval gap {rho_pairing(a.n, gap)} exceeds limit {limit}")
    n, kappa = a.n, a.kappa
    lower = (Fraction(0),) + a.nu.partial_sums()
    upper = (Fraction(0),) + b.nu.partial_sums()

    found: list[tuple[Fraction, ...]] = []

    def segment_ok(x0: int, y0: int, x1: int, y1: int) -> bool:
        slope = Fraction(y1 - y0, x1 - x0)
        for k in range(x0 + 1, x1 + 1):
            h = y0 + slope * (k - x0)
            if h < lower[k] or h > upper[k]:
                return False
        return True

    def extend(x0: int, y0: int, prev_slope, heights: list[Fraction]):
        for x1 in range(x0 + 1, n + 1):
            if x1 == n:
                candidates = [kappa]
            else:
                candidates = range(math.ceil(lower[x1]), math.floor(upper[x1]) + 1)
            for y1 in candidates:
                slope = Fraction(y1 - y0, x1 - x0)
                if prev_slope is not None and slope >= prev_slope:
                    continue
                if not segment_ok(x0, y0, x1, y1):
                    continue
                seg = [y0 + slope * (k - x0) for k in range(x0 + 1, x1 + 1)]
                if x1 == n:
                    found.append(tuple(heights + seg))
                else:
                    extend(x1, y1, slope, heights + seg)

    extend(0, 0, None, [])
    classes = []
    for sums in found:
        slopes = [sums[0]] + [sums[k + 1] - sums[k] for k in range(n - 1)]
        classes.append(IsoClass.from_slopes(slopes))
    classes.sort(key=lambda c: c.nu.partial_sums())
    assert classes[0] == a and classes[-1] == b
    return classes


def hasse_covers(classes: list[IsoClass]) -> dict[IsoClass, list[IsoClass]]:
    """Covering relations of dominance restricted to the given classes."""
    covers: dict[IsoClass, list[IsoClass]] = {c: [] for c in classes}
    for u in classes:
        ups = [v for v in classes if dominance_lt(u, v)]
        for v in ups:
            if not any(dominance_lt(w, v) for w in ups if w != v):
                covers[u].append(v)
        covers[u].sort(key=lambda c: c.nu.partial_sums())
    return covers


def maximal_chains(a: IsoClass, b: IsoClass,
                   limit: int = DEFAULT_GAP_LIMIT) -> list[list[IsoClass]]:
    """Every maximal chain a = c_0 < c_1 < ... < c_m = b (covers at each step)."""
    classes = interval(a, b, limit=limit)
    covers = hasse_covers(classes)
    expected = chain_length(a, b)
    chains: list[list[IsoClass]] = []

    def walk(path: list[IsoClass]):
        cur = path[-1]
        if cur == b:
            chains.append(list(path))
            return
        for nxt in covers[cur]:
            walk(path + [nxt])

    walk([a])
    for chain in chains:
        assert len(chain) - 1 == expected, \
            f"maximal chain of length {len(chain) - 1}, formula says {expected}"
    return chains
