"""Checking the structural statements on every small instance.

Each statement is a hypothesis and a conclusion, evaluated independently
with the graph and lattice primitives.  A report counts how many instances
were scanned, how many met the hypothesis, and lists counterexamples.
"""

from latgraph import run_suite, suite_ok

reports = run_suite(max_n=7, max_product=200)
for r in reports:
    print(f"{r.theorem:32s} {r.applicable:4d}/{r.scanned:<4d} {r.verdict}")

# The strict degree-one statement fails.  The 3-chain is the smallest
# witness (its one vertex has degree 0); the diamond is the first with two
# atoms, both isolated.
strict = next(r for r in reports if r.theorem == "deg1_strict")
first = next(c for c in strict.counterexamples if len(c["diagnostic"]["atom_degrees"]) == 2)
print("\ntwo-atom strict counterexample, meet table:")
for row in first["instance"]["meet"]:
    print("  ", row)
print("diagnostic:", first["diagnostic"])

print("\nsuite ok:", suite_ok(reports))
