"""Shared oracles for the unit and acceptance suites.

Each helper recomputes a quantity by an independent route (BFS word lengths,
exhaustive path enumeration, grid enumeration of slope vectors) so the
library's closed forms are checked against brute force rather than against
themselves.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from newton_strata import (
    AffineElement,
    IsoClass,
    NewtonPoint,
    affine_simple_reflection,
    cartan_type_a,
    dominance_leq,
    dominance_lt,
    qbg_for_rank,
)


# ---------------------------------------------------------------------------
# Affine length oracle: BFS in the Cayley graph of the affine simple
# reflections gives the minimal word length, which must equal length().
# ---------------------------------------------------------------------------

def affine_length_bfs_check(n: int, max_len: int) -> int:
    """Check length() == BFS word length for every element within max_len."""
    gens = [affine_simple_reflection(i, n) for i in range(n)]  # 0, 1, .., n-1
    identity = AffineElement.identity(n)
    depth = {identity: 0}
    frontier = [identity]
    for d in range(1, max_len + 1):
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in depth:
                    depth[y] = d
                    nxt.append(y)
        frontier = nxt
    for element, word_length in depth.items():
        assert element.length() == word_length, (
            f"length() = {element.length()} but minimal word has "
            f"{word_length} letters for {element}")
    return len(depth)


# ---------------------------------------------------------------------------
# QBG property suite: every shortest path between two elements carries the
# same weight, and lengths/distances/weights satisfy the bookkeeping
# identities edge by edge and pair by pair.
# ---------------------------------------------------------------------------

def qbg_uniformity_and_bookkeeping(rank: int) -> None:
    graph = qbg_for_rank(rank)
    cartan = cartan_type_a(rank)
    two_rho = cartan.two_rho
    elements = cartan.weyl_elements()
    for edge in graph.edges:
        delta = edge.target.length() - edge.source.length()
        assert delta == 1 - cartan.pairing(two_rho, edge.weight), (
            f"edge bookkeeping fails on {edge}")
        if edge.kind == "bruhat":
            assert edge.weight == tuple([0] * cartan.n) and delta == 1
        else:
            assert edge.kind == "quantum" and delta < 0
    for u in elements:
        for v in elements:
            dist = graph.distance(u, v)
            weights = graph.all_shortest_path_weights(u, v)
            assert len(weights) == 1, (
                f"shortest paths {u} -> {v} carry {len(weights)} weights")
            (weight,) = weights
            assert weight == graph.min_path_weight(u, v)
            assert v.length() - u.length() == dist - cartan.pairing(two_rho, weight)


# ---------------------------------------------------------------------------
# Newton poset oracle: enumerate every class in [a, b] from scratch on the
# 1/lcm(1..n) slope grid, then rebuild covers and maximal chains from raw
# dominance comparisons only.
# ---------------------------------------------------------------------------

def grid_interval(a: IsoClass, b: IsoClass) -> list[IsoClass]:
    """All classes c with a <= c <= b, enumerated slope by slope."""
    n = a.n
    assert b.n == n and a.kappa == b.kappa
    step = math.lcm(*range(1, n + 1))
    sums_a = a.nu.partial_sums()
    sums_b = b.nu.partial_sums()
    found: list[IsoClass] = []

    def extend(slopes: list[Fraction], running: Fraction) -> None:
        k = len(slopes)
        if k == n:
            if running == sums_a[-1]:
                try:
                    found.append(IsoClass(NewtonPoint(tuple(slopes))))
                except ValueError:
                    pass
            return
        low = sums_a[k] - (sums_b[k - 1] if k else 0)
        high = sums_b[k] - (sums_a[k - 1] if k else 0)
        if slopes:
            high = min(high, slopes[-1])
        num = math.ceil(low * step)
        while Fraction(num, step) <= high:
            slope = Fraction(num, step)
            total = running + slope
            if sums_a[k] <= total <= sums_b[k]:
                extend(slopes + [slope], total)
            num += 1

    extend([], Fraction(0))
    found.sort(key=lambda c: c.nu.partial_sums())
    return found


def brute_covers(classes: list[IsoClass]) -> dict[IsoClass, list[IsoClass]]:
    covers: dict[IsoClass, list[IsoClass]] = {c: [] for c in classes}
    for low in classes:
        for high in classes:
            if not dominance_lt(low, high):
                continue
            if any(dominance_lt(low, mid) and dominance_lt(mid, high)
                   for mid in classes):
                continue
            covers[low].append(high)
    return covers


def brute_maximal_chains(a: IsoClass, b: IsoClass) -> list[list[IsoClass]]:
    classes = grid_interval(a, b)
    covers = brute_covers(classes)
    chains: list[list[IsoClass]] = []

    def walk(path: list[IsoClass]) -> None:
        if path[-1] == b:
            chains.append(list(path))
            return
        for nxt in covers[path[-1]]:
            path.append(nxt)
            walk(path)
            path.pop()

    if dominance_leq(a, b):
        walk([a])
    return chains
