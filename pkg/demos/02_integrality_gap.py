#!/usr/bin/env python3
"""Why the game needs perfect graphs: the four-program chain.

For 0/1 costs, four optima line up:

    best stable set <= LP stable-set relaxation
                     = LP clique cover        (strong duality)
                    <= best integral clique cover

On a perfect graph all four coincide, the dual optimum is the game worth,
and an optimal dual IS a core imputation.  On the 5-cycle the two ends
stay strictly apart, the dual money exceeds the worth, and no core
imputation exists via the dual.
"""

from cliquecore import (
    DualGapError,
    compute_core_imputation,
    cycle,
    four_program_chain,
    paley3x3,
)


def show_chain(name, g):
    r = four_program_chain(g, [1] * g.n)
    print(f"{name}:")
    print(f"  best stable set        {r.integral_primal}")
    print(f"  LP stable-set optimum  {r.fractional_primal}")
    print(f"  LP clique-cover optimum {r.fractional_dual}")
    print(f"  best integral cover    {r.integral_dual}")
    print(f"  gap closed: {r.gap_closed}")


show_chain("3x3 grid (perfect)", paley3x3())
print()
show_chain("5-cycle (odd hole)", cycle(5))

print("\nasking for a core imputation on the 5-cycle:")
try:
    compute_core_imputation(cycle(5))
except DualGapError as exc:
    print(f"  refused: {exc}")
