#!/usr/bin/env python3
"""Moving money between clique systems: lifting and restriction.

Lifting: money placed on an arbitrary clique can always be moved to a
containing maximal clique; nobody's access shrinks and the total is
untouched.  This is why the game loses nothing by only funding maximal
cliques.

Restriction: when a scenario arrives, each firm's money lands on the
firm's footprint inside the scenario.  The restricted allocation is a
clique cover of the induced subgraph and carries exactly the money the
scenario can see, which is the heart of why dual optimality implies core
membership.
"""

from fractions import Fraction

from cliquecore import (
    Imputation,
    lift_dual,
    maximal_cliques,
    money,
    paley3x3,
    path,
    restrict_dual,
)

g = paley3x3()
firms = maximal_cliques(g)

print("lifting sub-clique money on the grid:")
scattered = {(0,): Fraction(1), (4, 5): Fraction(1), (8,): Fraction(1)}
for key, amount in scattered.items():
    print(f"  {amount} on {key}")
lifted = lift_dual(g, firms, scattered)
print("after lifting to maximal cliques:")
for cid, amount in enumerate(lifted.values):
    if amount:
        print(f"  firm {firms.key(cid)} holds {amount}")
print("total unchanged:", lifted.total)

print("\nrestriction on the grid, rows at 1:")
rows = Imputation.from_mapping(firms, {"0-1-2": 1, "3-4-5": 1, "6-7-8": 1})
diagonal = (0, 4, 8)
z = restrict_dual(g, firms, rows, diagonal)
print(f"scenario {list(diagonal)} sees:")
for key, amount in z.items():
    if amount:
        print(f"  {amount} at {key}")
print("restricted total:", sum(z.values(), Fraction(0)),
      "= scenario money:", money(g, firms, rows, diagonal))

print("\nrestriction on a 3-path, both edges funded:")
p = path(3)
p_firms = maximal_cliques(p)
imp = Imputation.from_mapping(p_firms, {"0-1": 1, "1-2": 1})
z = restrict_dual(p, p_firms, imp, (0, 2))
print("scenario {0, 2} sees:", dict(z))
