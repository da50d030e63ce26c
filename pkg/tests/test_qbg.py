"""Tests for the quantum Bruhat graph: edge law, counts re-derived by an
independent enumeration, path-weight uniformity, and the bookkeeping
identities relating distance, weight, and length."""

import itertools

import pytest

import helpers
from newton_strata import (
    QuantumBruhatGraph,
    WeylElement,
    cartan_type_a,
    qbg_for_rank,
)


def independent_edge_count(rank: int) -> int:
    """Count QBG edges from scratch: plain loops over one-line permutations,
    inversion counting, and the explicit type-A pairing <2rho, (e_i-e_j)^vee>
    = 2(j-i).  Shares no code with the library's graph builder."""
    n = rank + 1

    def inversions(p):
        return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])

    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        lu = inversions(perm)
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                # u * s_{(i,j)} swaps positions i and j of the one-line form.
                q = list(perm)
                q[i - 1], q[j - 1] = q[j - 1], q[i - 1]
                lt = inversions(q)
                if lt == lu + 1 or lt == lu - 2 * (j - i) + 1:
                    count += 1
    return count


class TestEdgeLaw:
    def test_edge_kinds_and_weights(self, qbg4):
        c = qbg4.cartan
        zero = (0,) * c.n
        for e in qbg4.edges:
            delta = e.target.length() - e.source.length()
            if e.kind == "bruhat":
                assert delta == 1
                assert e.weight == zero
            else:
                assert e.kind == "quantum"
                i, j = e.root_pair
                assert delta == 1 - 2 * (j - i)
                assert e.weight == c.coroot(c.positive_roots[
                    c.positive_root_pairs.index((i, j))])
            # Target really is source * s_alpha.
            assert e.target == e.source * c.reflection(e.root_pair)

    def test_identity_out_edges_are_simple_bruhat(self):
        g = qbg_for_rank(3)
        e = WeylElement.identity(4)
        out = g.edges_from(e)
        assert len(out) == 3
        assert all(edge.kind == "bruhat" for edge in out)
        assert sorted(edge.root_pair for edge in out) == [(1, 2), (2, 3), (3, 4)]

    def test_longest_element_out_edges_all_quantum(self):
        # In type A every positive root is a quantum root, so the longest
        # element has one quantum edge per positive root.
        for rank in (2, 3, 4):
            g = qbg_for_rank(rank)
            w0 = WeylElement(tuple(range(rank + 1, 0, -1)))
            out = g.edges_from(w0)
            assert len(out) == len(g.cartan.positive_roots)
            assert all(edge.kind == "quantum" for edge in out)


class TestEdgeCounts:
    def test_rank_two_count(self):
        assert qbg_for_rank(2).edge_count() == 15
        assert independent_edge_count(2) == 15

    def test_rank_three_count_double_enumeration(self):
        g = qbg_for_rank(3)
        assert g.edge_count() == independent_edge_count(3)

    def test_rank_four_count_double_enumeration(self, qbg4):
        assert qbg4.edge_count() == 770
        assert independent_edge_count(4) == 770


class TestPathsAndWeights:
    def test_self_distance(self):
        g = qbg_for_rank(2)
        e = WeylElement.identity(3)
        assert g.distance(e, e) == 0
        assert g.min_path_weight(e, e) == (0, 0, 0)

    def test_simple_step_each_way(self):
        g = qbg_for_rank(2)
        e = WeylElement.identity(3)
        s1 = WeylElement.simple(1, 3)
        assert g.distance(e, s1) == 1
        assert g.min_path_weight(e, s1) == (0, 0, 0)
        # Going back down passes through a quantum edge of weight alpha_1^vee.
        assert g.distance(s1, e) == 1
        assert g.min_path_weight(s1, e) == (1, -1, 0)

    def test_uniformity_and_bookkeeping_rank_two(self):
        helpers.qbg_uniformity_and_bookkeeping(2)

    def test_uniformity_and_bookkeeping_rank_three(self):
        helpers.qbg_uniformity_and_bookkeeping(3)

    def test_strong_connectivity(self, qbg4):
        w0 = WeylElement((5, 4, 3, 2, 1))
        e = WeylElement.identity(5)
        assert qbg4.distance(w0, e) >= 1
        assert qbg4.distance(e, w0) >= 1

    def test_distance_weight_for_analysis_pair(self, qbg4, example_candidate):
        # The pair consumed by the worked analysis: from w^{-1} to v the
        # distance is 5 and the weight is the highest coroot.
        v, w = example_candidate.v, example_candidate.w
        assert qbg4.distance(w.inverse(), v) == 5
        assert qbg4.min_path_weight(w.inverse(), v) == (1, 0, 0, 0, -1)

    def test_foreign_element_rejected(self):
        g = qbg_for_rank(2)
        with pytest.raises(ValueError):
            g.distance(WeylElement.identity(4), WeylElement.identity(4))


class TestDiagnostics:
    def test_to_dot_shape(self):
        g = qbg_for_rank(2)
        dot = g.to_dot()
        assert dot.startswith("digraph")
        assert dot.rstrip().endswith("}")
        # 6 vertices, 15 edges.
        assert dot.count("->") == 15
        assert dot.count("[label=") >= 6
        assert "style=dashed" in dot  # quantum edges are marked

    def test_cache(self):
        assert qbg_for_rank(2) is qbg_for_rank(2)

    def test_constructor_accepts_cartan(self):
        g = QuantumBruhatGraph(cartan_type_a(2))
        assert g.edge_count() == 15
