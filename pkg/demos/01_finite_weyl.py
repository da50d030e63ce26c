"""Finite Weyl groups of type A: permutations, words, and automorphisms.

The finite Weyl group of type A_{n-1} is the symmetric group S_n.  Elements
are stored as one-line permutations; reduced words are sequences of simple
transposition indices (1-based), multiplied left to right.  This script walks
through element construction, length, descent sets, canonical words, action
on integer vectors, and Dynkin-diagram automorphisms.
"""

from newton_strata import (
    CartanData,
    DiagramAutomorphism,
    WeylElement,
    cartan_type_a,
    parse_word,
    sigma_support,
)


def main() -> None:
    print("=== Root data for rank 3 (the symmetric group S_4) ===")
    cartan: CartanData = cartan_type_a(3)
    print(f"rank {cartan.rank}, acting on vectors of length {cartan.n}")
    print(f"positive roots ({len(cartan.positive_roots)}):")
    for root in cartan.positive_roots:
        print(f"  {root}")
    print(f"2*rho = {cartan.two_rho}")

    print()
    print("=== Elements, words, lengths ===")
    u = WeylElement.from_word(parse_word("1 2 1"), 4)
    print(f"word '1 2 1' evaluates to permutation {u}")
    print(f"length (inversion count) = {u.length()}")
    print(f"canonical reduced word   = {u.word_str()}")
    print(f"left descents            = {sorted(u.left_descents())}")

    # Words are not unique; canonical words are.
    same = WeylElement.from_word(parse_word("2 1 2"), 4)
    print(f"word '2 1 2' evaluates to {same} (same element: {u == same})")

    longest = WeylElement(tuple(range(4, 0, -1)))
    print(f"longest element {longest} has length {longest.length()} "
          f"(= number of positive roots)")

    print()
    print("=== Action on vectors ===")
    # (u . lam) places coordinate i of lam at position u(i).
    lam = (10, 20, 30, 40)
    print(f"{u} applied to {lam} -> {u.apply(lam)}")
    print(f"inverse {u.inverse()} undoes it -> {u.inverse().apply(u.apply(lam))}")

    print()
    print("=== Diagram automorphisms ===")
    identity = DiagramAutomorphism.identity(cartan)
    flip = DiagramAutomorphism(cartan, (3, 2, 1))  # reverse the diagram
    s1 = WeylElement.simple(1, 4)
    print(f"identity automorphism sends s_1 to {identity(s1).word_str()!r}")
    print(f"diagram flip sends s_1 to {flip(s1).word_str()!r}")

    # sigma_support closes the support of an element under the automorphism;
    # with the flip, supp(s_1) = {1} pulls in its mirror image 3.
    s2 = WeylElement.simple(2, 4)
    print(f"flip-stable support of s_1: {sorted(sigma_support(s1, flip))}")
    print(f"flip-stable support of s_2: {sorted(sigma_support(s2, flip))}")


if __name__ == "__main__":
    main()
