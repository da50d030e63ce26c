"""Finite Weyl group combinatorics for type A, plus abstract Cartan data.

Elements of the type A_{n-1} Weyl group are permutations of {1..n} in
one-line notation, acting on coweight vectors in Z^n by permuting
coordinates (u sends the i-th coordinate to position u(i)).  Words are
lists of 1-based simple-reflection indices and multiply left to right.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class RankMismatch(ValueError):
    """Operands live in Weyl groups of different ranks."""


# ---------------------------------------------------------------------------
# Cartan data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CartanData:
    """Root datum of GL_n (type A_{n-1}) in the standard Z^n basis.

    Only type A is constructed, but downstream code touches the root
    system exclusively through this interface (positive roots, coroots,
    2rho, the pairing), so other types would slot in here.
    """

    type_label: str
    rank: int  # number of simple roots; n = rank + 1

    @property
    def n(self) -> int:
        return self.rank + 1

    @property
    def simple_root_indices(self) -> range:
        return range(1, self.rank + 1)

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """e_i - e_j for i < j, as vectors in Z^n."""
        return _positive_roots(self.n)

    @property
    def positive_root_pairs(self) -> tuple[tuple[int, int], ...]:
        """The (i, j) index pairs (1-based, i < j) matching positive_roots."""
        return _positive_root_pairs(self.n)

    def simple_root(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.rank:
            raise RankMismatch(f"simple index {i} out of range for rank {self.rank}")
        root = [0] * self.n
        root[i - 1] = 1
        root[i] = -1
        return tuple(root)

    def coroot(self, root: tuple[int, ...]) -> tuple[int, ...]:
        # Type A is simply laced and self-dual in this basis.
        return root

    @property
    def two_rho(self) -> tuple[int, ...]:
        """Sum of the positive roots: (n-1, n-3, ..., -(n-1))."""
        return tuple(self.n - 1 - 2 * k for k in range(self.n))

    @staticmethod
    def pairing(weight: tuple, coweight: tuple):
        """⟨weight, coweight⟩, the dot product in the Z^n basis."""
        if len(weight) != len(coweight):
            raise RankMismatch("pairing of vectors of different lengths")
        return sum(a * b for a, b in zip(weight, coweight))

    def cartan_matrix_entry(self, i: int, j: int) -> int:
        return self.pairing(self.simple_root(i), self.coroot(self.simple_root(j)))

    def simple_reflection(self, i: int) -> "WeylElement":
        if not 1 <= i <= self.rank:
            raise RankMismatch(f"simple index {i} out of range for rank {self.rank}")
        return WeylElement.simple(i, self.n)

    def reflection(self, pair: tuple[int, int]) -> "WeylElement":
        """The reflection s_alpha for the positive root e_i - e_j."""
        i, j = pair
        perm = list(range(1, self.n + 1))
        perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
        return WeylElement(tuple(perm))

    def weyl_elements(self) -> tuple["WeylElement", ...]:
        """Every element of W_0, in a fixed (lexicographic) order."""
        return _weyl_elements(self.n)

    def dominance_partial_sums_ok(self, vec: tuple) -> bool:
        """vec lies in the dominant cone: non-increasing coordinates."""
        return all(vec[k] >= vec[k + 1] for k in range(len(vec) - 1))


@lru_cache(maxsize=None)
def cartan_type_a(rank: int) -> CartanData:
    if rank < 1:
        raise RankMismatch("rank must be a positive integer")
    return CartanData("A", rank)


@lru_cache(maxsize=None)
def _positive_root_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


@lru_cache(maxsize=None)
def _positive_roots(n: int) -> tuple[tuple[int, ...], ...]:
    roots = []
    for i, j in _positive_root_pairs(n):
        vec = [0] * n
        vec[i - 1] = 1
        vec[j - 1] = -1
        roots.append(tuple(vec))
    return tuple(roots)


@lru_cache(maxsize=None)
def _weyl_elements(n: int) -> tuple["WeylElement", ...]:
    return tuple(WeylElement(p) for p in itertools.permutations(range(1, n + 1)))


# ---------------------------------------------------------------------------
# Weyl group elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeylElement:
    """Permutation of {1..n} in one-line notation (perm[i-1] = u(i))."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.perm)}: {self.perm}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "WeylElement":
        if not 1 <= i <= n - 1:
            raise RankMismatch(f"simple index {i} out of range for n={n}")
        perm = list(range(1, n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return cls(tuple(perm))

    @classmethod
    def from_word(cls, word, n: int) -> "WeylElement":
        """Evaluate a word of simple-reflection indices left to right."""
        out = cls.identity(n)
        for i in word:
            out = out * cls.simple(i, n)
        return out

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """(u * v)(i) = u(v(i)): apply v first, then u."""
        if self.n != other.n:
            raise RankMismatch("composing elements of different ranks")
        return WeylElement(tuple(self.perm[other.perm[i] - 1] for i in range(self.n)))

    def inverse(self) -> "WeylElement":
        inv = [0] * self.n
        for i, img in enumerate(self.perm, start=1):
            inv[img - 1] = i
        return WeylElement(tuple(inv))

    def length(self) -> int:
        """Coxeter length = inversion count of the one-line notation."""
        p = self.perm
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if p[i] > p[j])

    def is_identity(self) -> bool:
        return self.perm == tuple(range(1, self.n + 1))

    def apply(self, coweight: tuple) -> tuple:
        """Permute coordinates: (u·λ)_{u(i)} = λ_i, so u·e_i = e_{u(i)}."""
        if len(coweight) != self.n:
            raise RankMismatch("coweight length does not match rank")
        out = [None] * self.n
        for i in range(self.n):
            out[self.perm[i] - 1] = coweight[i]
        return tuple(out)

    def left_descents(self) -> list[int]:
        """Indices i with ℓ(s_i·u) < ℓ(u), i.e. u^{-1}(i) > u^{-1}(i+1)."""
        inv = self.inverse().perm
        return [i for i in range(1, self.n) if inv[i - 1] > inv[i]]

    def right_descents(self) -> list[int]:
        """Indices i with ℓ(u·s_i) < ℓ(u), i.e. u(i) > u(i+1)."""
        return [i for i in range(1, self.n) if self.perm[i - 1] > self.perm[i]]

    def canonical_word(self) -> tuple[int, ...]:
        """Reduced word obtained by stripping the smallest left descent."""
        word = []
        u = self
        while True:
            desc = u.left_descents()
            if not desc:
                break
            i = desc[0]
            word.append(i)
            u = WeylElement.simple(i, self.n) * u
        return tuple(word)

    def support(self) -> frozenset[int]:
        """Simple indices occurring in any (hence every) reduced word."""
        return frozenset(self.canonical_word())

    def word_str(self) -> str:
        return " ".join(str(i) for i in self.canonical_word())

    def __str__(self) -> str:
        return "[" + " ".join(str(v) for v in self.perm) + "]"


# Functional aliases for the object methods.

def compose(u: WeylElement, v: WeylElement) -> WeylElement:
    return u * v


def length(u: WeylElement) -> int:
    return u.length()


def apply(u: WeylElement, coweight: tuple) -> tuple:
    return u.apply(coweight)


def parse_word(text: str) -> tuple[int, ...]:
    """Whitespace-separated simple indices; empty string is the identity."""
    return tuple(int(tok) for tok in text.split())


# ---------------------------------------------------------------------------
# Diagram automorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiagramAutomorphism:
    """Permutation of the simple indices preserving the Cartan matrix."""

    cartan: CartanData
    image: tuple[int, ...]  # image[i-1] = sigma(i)

    def __post_init__(self):
        r = self.cartan.rank
        if sorted(self.image) != list(range(1, r + 1)):
            raise ValueError(f"not a permutation of simple indices 1..{r}")
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                if self.cartan.cartan_matrix_entry(self.image[i - 1], self.image[j - 1]) \
                        != self.cartan.cartan_matrix_entry(i, j):
                    raise ValueError("index permutation does not preserve the Cartan matrix")

    @classmethod
    def identity(cls, cartan: CartanData) -> "DiagramAutomorphism":
        return cls(cartan, tuple(range(1, cartan.rank + 1)))

    def is_identity(self) -> bool:
        return self.image == tuple(range(1, self.cartan.rank + 1))

    def index(self, i: int) -> int:
        return self.image[i - 1]

    def inverse(self) -> "DiagramAutomorphism":
        inv = [0] * self.cartan.rank
        for i, img in enumerate(self.image, start=1):
            inv[img - 1] = i
        return DiagramAutomorphism(self.cartan, tuple(inv))

    def __call__(self, u: WeylElement) -> WeylElement:
        """Apply to a Weyl element through any reduced word."""
        if u.n != self.cartan.n:
            raise RankMismatch("element rank does not match the automorphism's")
        out = WeylElement.identity(u.n)
        for i in u.canonical_word():
            out = out * WeylElement.simple(self.index(i), u.n)
        return out


def sigma_support(u: WeylElement, sigma: DiagramAutomorphism) -> frozenset[int]:
    """Union of the sigma-orbits of the simple indices in supp(u)."""
    seen = set(u.support())
    frontier = set(seen)
    while frontier:
        frontier = {sigma.index(i) for i in frontier} - seen
        seen |= frontier
    return frozenset(seen)


def has_full_sigma_support(u: WeylElement, sigma: DiagramAutomorphism) -> bool:
    return sigma_support(u, sigma) == frozenset(range(1, u.n))
