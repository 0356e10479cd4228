"""Two reductions with the same endpoints and the same rules that are still different.

Both go A -> BBB -> BB -> C and use rho, sigma, tau once each; they differ in
which pair of B's sigma merges, and that changes which B's tau consumes.
"""

from permeq import canonical_greedy, equiv, evaluate, make_system, parse_proofterm, tragr_eq
from permeq.equivalence import oracle_search

system = make_system("A B C", "rho: A -> B B B; sigma: B B -> B; tau: B B -> C")

left = parse_proofterm("rho . sigma B . tau", system)
right = parse_proofterm("rho . B sigma . tau", system)

for name, p in [("left", left), ("right", right)]:
    g = evaluate(p)
    print(f"{name:5}: {canonical_greedy(p)}   causal edges {g.causal_edges()}")

print("tragr_eq:", tragr_eq(evaluate(left), evaluate(right)))
print("equiv   :", equiv(left, right))

# The brute-force search exhausts the (finite) class of `left` without meeting `right`.
verdict, expanded = oracle_search(left, right, budget=10_000)
print("oracle  :", verdict.value, f"after {expanded} expansions")

# Re-bracketing the same computation does not matter.
other = parse_proofterm("rho . (sigma B . tau)", system)
print("rebracketed equiv:", equiv(left, other), oracle_search(left, other)[0].value)
