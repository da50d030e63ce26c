"""Quantum Bruhat graph on a finite Weyl group, with distances and path weights.

Vertices are the elements of W_0.  For each u and each positive root alpha the
edge u -> u*s_alpha is present iff

  bruhat:  ℓ(u s_alpha) = ℓ(u) + 1                  (weight 0)
  quantum: ℓ(u s_alpha) = ℓ(u) - ⟨2rho, alpha^vee⟩ + 1   (weight alpha^vee)

Distances are directed shortest-path distances (source = first argument), and
min_path_weight returns the total coroot weight along a shortest path; all
shortest paths between two fixed vertices carry the same weight, which the
test suite verifies exhaustively in small rank.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .weyl import CartanData, WeylElement, cartan_type_a


@dataclass(frozen=True)
class QbgEdge:
    source: WeylElement
    target: WeylElement
    kind: str  # "bruhat" | "quantum"
    root_pair: tuple[int, int]
    weight: tuple[int, ...]  # coroot weight; zero vector for bruhat edges


class QuantumBruhatGraph:
    """All-pairs distances and shortest-path weights, built eagerly."""

    def __init__(self, cartan: CartanData):
        self.cartan = cartan
        self.elements = cartan.weyl_elements()
        self._index = {u.perm: k for k, u in enumerate(self.elements)}
        self._build_edges()
        self._run_bfs()

    # -- construction --------------------------------------------------------

    def _build_edges(self):
        cartan = self.cartan
        n = cartan.n
        zero = (0,) * n
        two_rho = cartan.two_rho
        reflections = [cartan.reflection(pair) for pair in cartan.positive_root_pairs]
        pairings = [cartan.pairing(two_rho, cartan.coroot(root))
                    for root in cartan.positive_roots]
        self._adj: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in self.elements]
        self._edge_records: list[QbgEdge] = []
        for k, u in enumerate(self.elements):
            lu = u.length()
            for pair, root, refl, pairing in zip(cartan.positive_root_pairs,
                                                 cartan.positive_roots,
                                                 reflections, pairings):
                t = u * refl
                lt = t.length()
                if lt == lu + 1:
                    kind, weight = "bruhat", zero
                elif lt == lu - pairing + 1:
                    kind, weight = "quantum", cartan.coroot(root)
                else:
                    continue
                ti = self._index[t.perm]
                self._adj[k].append((ti, weight))
                self._edge_records.append(QbgEdge(u, t, kind, pair, weight))

    def _run_bfs(self):
        m = len(self.elements)
        n = self.cartan.n
        zero = (0,) * n
        self._dist = [[-1] * m for _ in range(m)]
        self._weight: list[list[tuple[int, ...] | None]] = [[None] * m for _ in range(m)]
        for src in range(m):
            dist, wt = self._dist[src], self._weight[src]
            dist[src], wt[src] = 0, zero
            queue = deque([src])
            while queue:
                cur = queue.popleft()
                for nxt, ewt in self._adj[cur]:
                    if dist[nxt] < 0:
                        dist[nxt] = dist[cur] + 1
                        wt[nxt] = tuple(a + b for a, b in zip(wt[cur], ewt))
                        queue.append(nxt)
        assert all(d >= 0 for row in self._dist for d in row), \
            "quantum Bruhat graph must be strongly connected"

    # -- queries --------------------------------------------------------------

    def _idx(self, u: WeylElement) -> int:
        try:
            return self._index[u.perm]
        except KeyError:
            raise ValueError(f"element {u} is not in this Weyl group") from None

    def distance(self, u: WeylElement, v: WeylElement) -> int:
        """Directed shortest-path distance from u to v."""
        return self._dist[self._idx(u)][self._idx(v)]

    def min_path_weight(self, u: WeylElement, v: WeylElement) -> tuple[int, ...]:
        """Coroot weight of a (hence any) shortest path from u to v."""
        return self._weight[self._idx(u)][self._idx(v)]

    def edges_from(self, u: WeylElement) -> list[QbgEdge]:
        return [e for e in self._edge_records if e.source.perm == u.perm]

    @property
    def edges(self) -> list[QbgEdge]:
        return list(self._edge_records)

    def edge_count(self) -> int:
        return len(self._edge_records)

    # -- diagnostics -----------------------------------------------------------

    def all_shortest_path_weights(self, u: WeylElement, v: WeylElement) -> set:
        """Weights of *all* shortest u -> v paths (exhaustive; small ranks)."""
        src, dst = self._idx(u), self._idx(v)
        dist = self._dist[src]
        sets: dict[int, set] = {src: {(0,) * self.cartan.n}}
        order = sorted((k for k in range(len(self.elements)) if dist[k] >= 0),
                       key=lambda k: dist[k])
        for cur in order:
            if cur not in sets:
                continue
            for nxt, ewt in self._adj[cur]:
                if dist[nxt] == dist[cur] + 1:
                    tgt = sets.setdefault(nxt, set())
                    for w in sets[cur]:
                        tgt.add(tuple(a + b for a, b in zip(w, ewt)))
        return sets.get(dst, set())

    def to_dot(self) -> str:
        """Graphviz DOT text; meant for small ranks."""
        lines = ["digraph qbg {", '  rankdir=BT;']
        for k, u in enumerate(self.elements):
            label = u.word_str() or "e"
            lines.append(f'  n{k} [label="{label}"];')
        for e in self._edge_records:
            style = "" if e.kind == "bruhat" else ' [style=dashed,label="%s"]' % (
                ",".join(str(c) for c in e.weight))
            lines.append(f"  n{self._idx(e.source)} -> n{self._idx(e.target)}{style};")
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def qbg_for_rank(rank: int) -> QuantumBruhatGraph:
    return QuantumBruhatGraph(cartan_type_a(rank))
