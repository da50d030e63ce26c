"""Monte-Carlo estimation of generic Newton points from matrix samples.

Instead of trusting the closed-form generic Newton point, one can sample:
draw random lower-triangular Iwahori matrices g over F_p((t)) (unit diagonal,
above-diagonal entries divisible by t), form g * M(x) with M(x) the matrix of
the affine element x, and read the Newton point off the Newton polygon of
the characteristic-polynomial valuations.  The dominance-maximum over the
histogram recovers the generic point.

All arithmetic is exact: coefficient convolutions run through float64 FFTs
whose entries stay far below 2^53, so rounding recovers the integer products,
and a precision floor on the tracked t-degree window guarantees the polygon
vertices are unaffected by truncation (PrecisionLoss is raised otherwise).
"""

from newton_strata import (
    AffineElement,
    DiagramAutomorphism,
    SamplerConfig,
    WeylElement,
    cartan_type_a,
    estimate_generic_newton,
    generic_newton_point,
    matrix_of,
    newton_point_of_matrix,
    parse_normal,
    parse_word,
    required_deg_cap,
)


def main() -> None:
    print("=== The matrix of an affine element ===")
    x2 = parse_normal("v: mu:3,-3 w:1", 2)
    mat = matrix_of(x2, p=101, deg_cap=required_deg_cap((3, -3), 2))
    print(f"x = t^(3,-3) s_1 over F_101, degree window "
          f"[{mat.val_min}, {mat.deg_cap}]")
    print("entry valuations (None = zero entry):")
    for i in range(2):
        print("  " + "  ".join(str(mat.entry_valuation(i, j)).rjust(4)
                               for j in range(2)))

    print()
    print("=== Newton points of explicit matrices ===")
    for text, n in (("v: mu:2,-1 w:", 2), ("v: mu:1,0 w:", 2),
                    ("v: mu:1,0 w:1", 2)):
        y = parse_normal(text, n)
        m = matrix_of(y, p=101, deg_cap=required_deg_cap(y.translation, n))
        nu = newton_point_of_matrix(m)
        print(f"  {text:18} -> {nu}")

    print()
    print("=== Sampling a GL_2 element ===")
    config = SamplerConfig(p=101, samples=400, rng_seed=7)
    report = estimate_generic_newton(x2, config)
    print(f"deg_cap resolved to the precision floor: {report.deg_cap}")
    print(f"histogram over {report.total} samples "
          f"({report.discarded} discarded):")
    for cls, count in report.histogram:
        print(f"  {str(cls):12} x{count}")
    print(f"dominance-maximal points: "
          f"{', '.join(str(c) for c in report.max_points)}")
    sigma2 = DiagramAutomorphism.identity(cartan_type_a(1))
    formula = generic_newton_point(x2, sigma2)
    print(f"closed form agrees: {report.max_points == (formula,)}")

    print()
    print("=== Sampling the rank-4 working example (small run) ===")
    mu = (150, 75, 0, -75, -150)
    v = WeylElement.from_word(parse_word("4 2 3 1"), 5)
    w = WeylElement.from_word(parse_word("1 2 3 4 2 3 1"), 5)
    x = AffineElement.from_normal(v, mu, w)
    print(f"precision floor for mu: required_deg_cap = "
          f"{required_deg_cap(mu, 5)}")
    report = estimate_generic_newton(
        x, SamplerConfig(p=101, samples=60, rng_seed=11))
    print(f"{report.total} samples, {report.discarded} discarded, "
          f"max = {', '.join(str(c) for c in report.max_points)}")
    print(f"count at the maximum: {report.count_of(report.max_points[0])}")


if __name__ == "__main__":
    main()
