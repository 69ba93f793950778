"""Meet tables: building, validating and reading off the order.

Run with ``python3 demos/semilattices.py``.
"""

import numpy as np

from latgraph import chain, validate
from latgraph.semilattice import InvalidMeetTable, atoms, check_axioms, dual_atoms, from_order, zero_divisors

# The diamond: 0 < a, b < 1 with a and b incomparable.
diamond = validate(
    [
        [0, 0, 0, 0],
        [0, 1, 0, 1],
        [0, 0, 2, 2],
        [0, 1, 2, 3],
    ],
    bottom=0,
    top=3,
    labels=["0", "a", "b", "1"],
)
print("diamond covers:", [(diamond.label(x), diamond.label(y)) for x, y in diamond.order.covers])
print("length:", diamond.order.length)
print("atoms:", sorted(atoms(diamond)), "dual atoms:", sorted(dual_atoms(diamond)))
print("zero-divisors:", sorted(zero_divisors(diamond)))

# A broken table gets every violated law, each with a witness.
broken = [[0, 1, 0], [0, 1, 2], [0, 1, 2]]
for v in check_axioms(broken, 0, 2):
    print(f"  {v.axiom:20s} witness {v.witness}")
try:
    validate(broken, 0, 2)
except InvalidMeetTable as exc:
    print("validate refused it:", len(exc.violations), "violations")

# The same structures can be given as an order relation instead.
leq = np.array(
    [
        [1, 1, 1, 1, 1],
        [0, 1, 1, 0, 1],
        [0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1],
    ],
    dtype=bool,
)
pentagon = from_order(leq)
print("pentagon meet table:\n", np.asarray(pentagon.meet))
print("5-chain interior:", chain(5).interior())
