"""Searching for conforming triples and analyzing a Newton stratification.

A triple (v, w, s) of two finite Weyl elements and a simple index conforms
when seven combinatorial conditions hold (support, descent, and
quantum-Bruhat-graph requirements).  Rank 4 is the first rank where any
exist; the packaged table lists all 56.  For a conforming triple and a
superregular dominant translation mu, x = v t^mu w and its reductions
s x, s x s have generic Newton points that the analyzer turns into a full
stratum report: dimensions, codimensions, and the chain structure between
the two generic points.
"""

from newton_strata import (
    AffineElement,
    WeylElement,
    analyze,
    cartan_type_a,
    check_triple_conditions,
    generic_newton_point,
    is_cordial,
    qbg_for_rank,
    search_triples,
    virtual_dimension,
)


def main() -> None:
    print("=== Exhaustive search, ranks 1 through 4 ===")
    for rank in (1, 2, 3, 4):
        found = search_triples(cartan_type_a(rank))
        print(f"  rank {rank}: {len(found)} conforming triples")

    triples = search_triples(cartan_type_a(4))
    cand = next(t for t in triples
                if t.v.word_str() == "2 1 4 3" and t.s == 2)
    print(f"\nworking triple: {cand}")
    report_conditions = check_triple_conditions(cand, qbg_for_rank(4))
    print(f"all seven conditions hold: {report_conditions.passed}")

    print()
    print("=== Generic Newton points and cordiality ===")
    mu = (150, 75, 0, -75, -150)
    bound = 74
    graph = qbg_for_rank(4)
    x = AffineElement.from_normal(cand.v, mu, cand.w)
    s = AffineElement.from_finite(WeylElement.simple(cand.s, 5))
    for name, y in (("x", x), ("sx", s * x), ("sxs", s * x * s)):
        nu = generic_newton_point(y, cand.sigma, graph, bound)
        cordial = is_cordial(y, cand.sigma, graph, bound)
        print(f"  {name:3}  l = {y.length():4}  nu = {nu}  cordial = {cordial}")

    d = virtual_dimension(x, generic_newton_point(x, cand.sigma, graph, bound),
                          cand.sigma)
    print(f"virtual dimension of x at its generic point: {d}")

    print()
    print("=== Full stratum analysis ===")
    report = analyze(cand, mu, bound, graph=graph)
    print(report)

    print()
    print("=== Machine-readable form (top-level keys) ===")
    data = report.to_json()
    print("  " + ", ".join(sorted(data)))
    print(f"  noneq_certificate = {data['noneq_certificate']}")
    print(f"  d_difference      = {data['d_difference']}")


if __name__ == "__main__":
    main()
