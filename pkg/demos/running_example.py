"""Two reductions of ABAAB, one sequential and one greedy, shown to be the same computation."""

from permeq import (canonical_greedy, equiv, evaluate, flatten, greedy_normalize, is_greedy,
                    loath_pairs, parse_proofterm, parse_system, sr_measure, to_reduction)
from permeq.cli import render_evolution

system = parse_system("""
alphabet: A B
rules:
  alpha: B B -> A
  beta: A A B -> B A A B
""")

# A reduction firing one rule per step.
gamma = parse_proofterm(
    "A B beta . A alpha A A B . A A beta . beta A A B . B beta A A B . "
    "alpha A A B A A B . A beta A A B", system)
print("gamma  :", " ".join(gamma.src), "->", " ".join(gamma.tgt))

# The same work done in parallel layers.
gamma_p = parse_proofterm(
    "A B beta . A alpha beta . beta A A B . B beta A A B . alpha beta A A B", system)

r = to_reduction(gamma)
print("steps  :", len(r))
print("loath  :", [i + 1 for i in loath_pairs(r)])   # 1-based pairs (i, i+1)
print("greedy?:", is_greedy(r), is_greedy(to_reduction(gamma_p)))

# Swapping pulls rule occurrences as early as they can go.
def show(before, after):
    print("  swap:", sr_measure(before), "->", sr_measure(after))

normal = greedy_normalize(r, on_swap=show)
print("normal :", normal)

# The tragr route gives the same answer.
print("ts∘eval:", canonical_greedy(gamma))
print("equiv  :", equiv(gamma, gamma_p))

# Sequentialising the greedy form gives back gamma.
print("flatten(gamma') == gamma:", flatten(gamma_p) == r)
print()
print(render_evolution(to_reduction(gamma_p)))

print(evaluate(gamma))
