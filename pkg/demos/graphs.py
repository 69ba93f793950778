"""The graph on the interior of a semilattice, and what it looks like.

Two interior elements are adjacent when their meet is not the bottom.
Chains give complete graphs; products of chains are where it gets
interesting.
"""

import json

from latgraph import build_graph, chain, chain_product
from latgraph.graph import euler_tour, export_dot, metrics, shape_name

for n in (3, 4, 5, 7):
    G = build_graph(chain(n))
    m = metrics(G).to_json()
    print(f"{n}-chain: {shape_name(G):12s} diameter={m['diameter']} girth={m['girth']} eulerian={m['eulerian']} planar={m['planar']}")

# (1,2) is the six-element product of a 2-chain and a 3-chain.
T = chain_product((1, 2))
G = build_graph(T.table)
print("\nproduct (1,2):", shape_name(G))
print(json.dumps(metrics(G).to_json(), indent=2))

# The Boolean cube: six vertices, degrees 4,4,4,2,2,2, and an Euler tour.
B3 = chain_product((1, 1, 1))
G = build_graph(B3.table)
m = metrics(G)
print("\nB3 degrees:", m.degrees)
print("B3 Euler tour:", [B3.table.label(v) for v in euler_tour(G)])

labels = {v: B3.table.label(v) for v in G.vertices}
print("\n" + export_dot(G, labels))
