"""The poset of isocrystal classes: dominance order, defect, and chains.

An isocrystal class for GL_n is a non-increasing rational vector of slopes
whose partial sums are integral exactly at the slope breaks (and whose total
is integral).  Classes with the same total kappa are ordered by dominance:
a <= b when every partial sum of a is at most the matching partial sum of b.
The poset is ranked; the closed-form chain length between comparable classes
is

    chain_length(a, b) = <rho, b - a> + (defect(a) - defect(b)) / 2.
"""

from newton_strata import (
    IsoClass,
    NewtonPoint,
    basic_class,
    chain_length,
    defect,
    dominance_leq,
    dominance_max,
    hasse_covers,
    interval,
    maximal_chains,
)


def main() -> None:
    print("=== Valid and invalid slope vectors ===")
    for text in ("1,1/2,1/2,0", "3/2,3/2,0", "1/2,1/2,-1/2,-1/2"):
        cls = IsoClass.from_string(text)
        print(f"  {text:18} ok   kappa={cls.kappa}  defect={defect(cls)}")
    for text in ("1/2,-1/2", "2/3,-1/3,-1/3", "0,1"):
        try:
            IsoClass.from_string(text)
        except ValueError as exc:
            print(f"  {text:18} REJECTED ({exc})")

    print()
    print("=== Dominance order ===")
    a = IsoClass.from_string("1,0,-1")
    b = IsoClass.from_string("2,0,-2")
    print(f"{a} <= {b}: {dominance_leq(a, b)}")
    print(f"dominance_max of that pair: {dominance_max(a, b)}")
    # Partial sums (2, 1, 0) vs (1, 2, 0) cross, so neither dominates.
    c = IsoClass.from_string("2,-1,-1")
    d = IsoClass.from_string("1,1,-2")
    print(f"{c} <= {d}: {dominance_leq(c, d)},  "
          f"{d} <= {c}: {dominance_leq(d, c)}  (incomparable)")
    try:
        dominance_max(c, d)
    except Exception as exc:
        print(f"dominance_max rejects them: {type(exc).__name__}: {exc}")
    print(f"basic class with kappa=0 for GL_3: {basic_class(3, 0)}")

    print()
    print("=== Intervals and maximal chains ===")
    bottom = IsoClass.from_string("0,0,0")
    top = IsoClass.from_string("1,0,-1")
    classes = interval(bottom, top)
    print(f"interval [{bottom}, {top}] has {len(classes)} classes:")
    for cls in classes:
        print(f"  {cls}   defect {defect(cls)}")
    print(f"closed-form chain length: {chain_length(bottom, top)}")
    chains = maximal_chains(bottom, top)
    print(f"{len(chains)} maximal chains:")
    for chain in chains:
        print("  " + "  <  ".join(str(c) for c in chain))

    print()
    print("=== Hasse diagram (cover relations) ===")
    covers = hasse_covers(classes)
    for low, highs in covers.items():
        for high in highs:
            print(f"  {low}  -<  {high}")

    print()
    print("=== Fractional slopes change the defect, and the rank ===")
    lo = IsoClass.from_string("1/2,1/2")
    hi = IsoClass.from_string("3,-2")
    print(f"chain length {lo} -> {hi}: {chain_length(lo, hi)} "
          f"(defect drops from {defect(lo)} to {defect(hi)})")
    point = NewtonPoint((1, 1, 0))  # plain integers coerce to Fractions
    print(f"NewtonPoint{point.slopes} built from ints; "
          f"JSON entries {point.json_entries()}")


if __name__ == "__main__":
    main()
