"""Extended affine Weyl group elements: normal form, length, and invariants.

An element is a translation part t^lambda times a finite permutation.  The
normal form x = v t^mu w puts mu in the dominant chamber; for regular
dominant mu the length satisfies

    l(v t^mu w) = <2 rho, mu> + l(v) - l(w).

The script demonstrates multiplication, the normal form, the length
homomorphism kappa (sum of the translation part, invariant under
conjugation), and the companion permutation eta(x) = sigma^{-1}(w) v that
drives the dimension theory downstream.
"""

from newton_strata import (
    AffineElement,
    DiagramAutomorphism,
    WeylElement,
    cartan_type_a,
    eta,
    format_normal,
    format_raw,
    is_superregular,
    mult_simple,
    parse_normal,
    parse_word,
)


def main() -> None:
    n = 3
    cartan = cartan_type_a(n - 1)

    print("=== Construction and multiplication ===")
    x = parse_normal("v:1 mu:4,1,-5 w:2 1", n)
    print(f"x in normal form : {format_normal(x)}")
    print(f"x in raw form    : {format_raw(x)}")
    print(f"l(x) = {x.length()},  kappa(x) = {x.kappa()}")

    y = AffineElement.from_finite(WeylElement.simple(2, n))
    print(f"x * s_2          : {format_normal(x * y)}")
    print(f"s_2 * x          : {format_normal(y * x)}")

    print()
    print("=== Length formula for regular dominant translations ===")
    mu = (5, 2, -7)
    two_rho_mu = cartan.pairing(cartan.two_rho, mu)
    print(f"mu = {mu}, <2 rho, mu> = {two_rho_mu}")
    for v_word, w_word in [("", ""), ("1", ""), ("", "1"), ("1 2 1", "2")]:
        v = WeylElement.from_word(parse_word(v_word), n)
        w = WeylElement.from_word(parse_word(w_word), n)
        z = AffineElement.from_normal(v, mu, w)
        predicted = two_rho_mu + v.length() - w.length()
        print(f"  v={v_word or 'e':5}  w={w_word or 'e':3}  "
              f"l = {z.length():3d}  formula gives {predicted:3d}")

    print()
    print("=== Multiplying by a simple reflection moves length by one ===")
    z = parse_normal("v: mu:5,2,-7 w:", n)
    for i in (1, 2):
        for side in ("left", "right"):
            product, delta = mult_simple(side, i, z)
            print(f"  {side:5} s_{i}: l {z.length()} -> {product.length()} "
                  f"(delta {delta:+d})")

    print()
    print("=== kappa is a conjugation-invariant homomorphism ===")
    g = parse_normal("v:2 mu:3,0,-1 w:1", n)
    conj = g * x * g.inverse()
    print(f"kappa(x) = {x.kappa()}, kappa(g x g^-1) = {conj.kappa()}")
    print(f"kappa(x * g) = {(x * g).kappa()} = kappa(x) + kappa(g) "
          f"= {x.kappa()} + {g.kappa()}")

    print()
    print("=== eta and superregularity ===")
    sigma = DiagramAutomorphism.identity(cartan)
    v, mu, w = x.normal_form()
    print(f"x = v t^mu w with v={v}, mu={mu}, w={w}")
    print(f"eta(x) = sigma^-1(w) * v = {eta(x, sigma)}")
    for bound in (1, 4, 5):
        print(f"  is_superregular(x, bound={bound}) = {is_superregular(x, bound)}")


if __name__ == "__main__":
    main()
