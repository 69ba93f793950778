"""Listing every small lattice once.

New lattices come from old ones by slipping a fresh atom under an up-set;
a canonical form throws away the duplicates.
"""

from collections import Counter

from latgraph import build_graph, canonical_form, enumerate_lattices
from latgraph.graph import shape_name

for n in range(2, 9):
    print(f"n={n}: {sum(1 for _ in enumerate_lattices(n))} lattices")

# Relabeling does not change the canonical form.
S = list(enumerate_lattices(6))[7]
T = S.relabel([5, 3, 1, 0, 2, 4])
print("\nsame key after relabeling:", canonical_form(S) == canonical_form(T))

# What the graphs of the 7-element lattices look like.
shapes = Counter(shape_name(build_graph(S)) for S in enumerate_lattices(7))
for name, k in shapes.most_common():
    print(f"  {name:14s} {k}")
