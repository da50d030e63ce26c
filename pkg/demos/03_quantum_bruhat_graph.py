"""The quantum Bruhat graph: edges, distances, and path weights.

Vertices are the elements of the finite Weyl group.  For each positive root
alpha there is an edge u -> u r_alpha when either

  * l(u r_alpha) = l(u) + 1                  (a "bruhat" edge, weight 0), or
  * l(u r_alpha) = l(u) - <2 rho, alpha^vee> + 1   (a "quantum" edge,
    weight alpha^vee).

Shortest-path distances and the coroot weight accumulated along a shortest
path are the inputs to cordiality tests and generic Newton points.
"""

from newton_strata import WeylElement, cartan_type_a, parse_word, qbg_for_rank


def main() -> None:
    print("=== Small graph: rank 2 (S_3) ===")
    graph = qbg_for_rank(2)
    print(f"{len(graph.elements)} vertices, {graph.edge_count()} edges")
    for edge in graph.edges:
        wt = "" if edge.kind == "bruhat" else f"  weight {edge.weight}"
        print(f"  {edge.source} -> {edge.target}  [{edge.kind}]{wt}")

    print()
    print("=== Every vertex has out-degree rank + #quantum edges ===")
    e = WeylElement.identity(3)
    w0 = WeylElement((3, 2, 1))
    print(f"out-degree of identity: {len(graph.edges_from(e))} "
          f"(only bruhat edges along simple roots)")
    print(f"out-degree of longest element: {len(graph.edges_from(w0))} "
          f"(a quantum edge for every positive root)")

    print()
    print("=== Distances and weights in rank 4 (S_5) ===")
    graph4 = qbg_for_rank(4)
    print(f"{len(graph4.elements)} vertices, {graph4.edge_count()} edges")

    # The pair that matters for the worked example downstream: from the
    # inverse of w to v, for v, w from the conforming-triple table.
    v = WeylElement.from_word(parse_word("4 2 3 1"), 5)
    w = WeylElement.from_word(parse_word("1 2 3 4 2 3 1"), 5)
    d = graph4.distance(w.inverse(), v)
    wt = graph4.min_path_weight(w.inverse(), v)
    print(f"v = {v}  (length {v.length()})")
    print(f"w = {w}  (length {w.length()})")
    print(f"distance(w^-1 -> v) = {d}")
    print(f"shortest-path coroot weight = {wt}")
    all_weights = graph4.all_shortest_path_weights(w.inverse(), v)
    print(f"weights over all shortest paths: {sorted(all_weights)} "
          f"(single-valued: {len(all_weights) == 1})")

    print()
    print("=== Graphviz export ===")
    dot = qbg_for_rank(2).to_dot()
    print(f"to_dot() renders {dot.count('->')} arrows; first lines:")
    for line in dot.splitlines()[:4]:
        print(f"  {line}")
    print("  ...")


if __name__ == "__main__":
    main()
