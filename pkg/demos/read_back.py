"""Building a trace graph and reading it back stage by stage."""

import json

from permeq import evaluate, parse_proofterm, parse_system, serialize_tragr, to_dot, ts
from permeq.toposort import minimal_layer, ts_stages

system = parse_system("alphabet: A B\nrules:\n alpha: B B -> A\n beta: A A B -> B A A B")
gamma = parse_proofterm(
    "A B beta . A alpha A A B . A A beta . beta A A B . B beta A A B . "
    "alpha A A B A A B . A beta A A B", system)

g = evaluate(gamma)
print(g)
print("causal edges:", g.causal_edges())

# Every stage peels all minimal nodes at once.
for k, stage in enumerate(ts_stages(g), 1):
    nodes = stage.tragr.nodes
    if stage.multistep is None:
        print(f"stage {k}: ladder on {' '.join(stage.tragr.source)}")
        continue
    layer = minimal_layer(stage.tragr)
    spans = [(nodes[n].name, tuple(iv)) for n, iv in zip(layer.nodes, layer.intervals)]
    print(f"stage {k}: {len(nodes)} nodes, fire {spans} -> {stage.multistep}")

print()
print("read back:", ts(g))

doc = json.loads(serialize_tragr(g))
print(len(doc["nodes"]), "nodes,", len(doc["edges"]), "edges in the JSON document")

# Paste into `dot -Tsvg` to draw it.
print(to_dot(evaluate(parse_proofterm("beta", system)), name="beta"))
