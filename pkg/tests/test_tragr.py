import json
import random
import re

import networkx as nx
import pytest

from permeq.logicality import flatten
from permeq.proofterm import Empty, Lit, RuleSym, parse_proofterm, rule_count, to_reduction
from permeq.rewrite import lstring
from permeq.tragr import (Edge, In, NotPlanarOrIllFormed, Out, Src, Tgt, TragrFormatError,
                          TragrNotComposable, evaluate, juxt_tragr, ladder, parse_tragr,
                          serialize_tragr, to_dot, tragr_eq, validate, vcomp_tragr)

from generators import LAWS, law_instance, random_case


def ev(text, system):
    return evaluate(parse_proofterm(text, system))


def test_juxt_of_letters_is_a_ladder():
    assert juxt_tragr(evaluate(Lit("A")), evaluate(Lit("B"))) == ladder(("A", "B"))


def test_juxt_units(running):
    g = ev("A alpha beta", running)
    assert juxt_tragr(evaluate(Empty()), g) == g
    assert juxt_tragr(g, evaluate(Empty())) == g


def test_juxt_matches_direct_evaluation(running):
    assert juxt_tragr(ev("A alpha", running), ev("beta", running)) == ev("A alpha beta", running)


def test_vcomp_units(running, gamma):
    g = evaluate(gamma)
    assert vcomp_tragr(ladder(g.source), g) == g
    assert vcomp_tragr(g, ladder(g.target)) == g


def test_vcomp_of_layers_is_eval_gamma(gamma):
    layers = [evaluate(step.to_term()) for step in to_reduction(gamma).steps]
    g = layers[0]
    for h in layers[1:]:
        g = vcomp_tragr(g, h)
    assert g == evaluate(gamma)


def test_vcomp_mismatch(running):
    with pytest.raises(TragrNotComposable):
        vcomp_tragr(ev("alpha", running), ev("B", running))


def test_eval_gamma_equals_eval_gamma_prime(gamma, gamma_prime):
    assert serialize_tragr(evaluate(gamma)) == serialize_tragr(evaluate(gamma_prime))
    assert tragr_eq(evaluate(gamma), evaluate(gamma_prime))


def test_eval_string_is_ladder(running):
    g = ev("A B A A B", running)
    assert g == ladder(lstring("A B A A B")) and len(g.edges) == 5


def test_eval_rule(running):
    g = ev("beta", running)
    assert len(g.nodes) == 1
    ins = [e for e in g.edges if isinstance(e.head, In)]
    outs = [e for e in g.edges if isinstance(e.tail, Out)]
    assert sorted(e.letter for e in ins) == ["A", "A", "B"] and all(isinstance(e.tail, Src) for e in ins)
    assert [e.letter for e in sorted(outs, key=lambda e: e.head.index)] == ["B", "A", "A", "B"]


def test_trace_counterexample(trace_system):
    left = ev("rho . sigma B . tau", trace_system)
    right = ev("rho . B sigma . tau", trace_system)
    assert (left.source, left.target) == (right.source, right.target)
    assert not tragr_eq(left, right)
    assert tragr_eq(left, left)


def test_serialize_single_letter():
    doc = json.loads(serialize_tragr(evaluate(Lit("A"))))
    assert doc == {"source": ["A"], "target": ["A"], "nodes": [],
                   "edges": [{"from": {"kind": "src", "index": 0},
                              "to": {"kind": "tgt", "index": 0}, "letter": "A"}]}


def test_serialize_round_trip(running, gamma):
    g = evaluate(gamma)
    text = serialize_tragr(g)
    assert parse_tragr(text, running) == g
    assert serialize_tragr(parse_tragr(text, running)) == text


def test_crossing_wires_rejected(running):
    doc = {"source": ["A", "B"], "target": ["B", "A"], "nodes": [],
           "edges": [{"from": {"kind": "src", "index": 0}, "to": {"kind": "tgt", "index": 1}, "letter": "A"},
                     {"from": {"kind": "src", "index": 1}, "to": {"kind": "tgt", "index": 0}, "letter": "B"}]}
    with pytest.raises(NotPlanarOrIllFormed):
        parse_tragr(json.dumps(doc), running)


def _doc(g):
    return json.loads(serialize_tragr(g))


def test_dangling_port_rejected(running):
    doc = _doc(ev("A B beta", running))
    doc["edges"].pop()
    with pytest.raises(NotPlanarOrIllFormed):
        parse_tragr(json.dumps(doc), running)


def test_letter_mismatch_rejected(running):
    doc = _doc(ev("alpha", running))
    doc["edges"][0]["letter"] = "A"
    with pytest.raises(NotPlanarOrIllFormed):
        parse_tragr(json.dumps(doc), running)


def test_cycle_rejected(running):
    # feed beta from the alpha that consumes its output
    g = ev("A B beta . A alpha A A B", running)
    doc = _doc(g)
    for edge in doc["edges"]:
        if edge["from"]["kind"] == "src" and edge["to"]["kind"] == "in" and edge["to"]["node"] == 0:
            edge["from"] = {"kind": "out", "node": 1, "port": 0}
            break
    with pytest.raises((NotPlanarOrIllFormed, TragrFormatError)):
        parse_tragr(json.dumps(doc), running)


@pytest.mark.parametrize("text", ["{", "[]", '{"source": ["A"]}', json.dumps(
    {"source": ["Z"], "target": ["Z"], "nodes": [], "edges": []})])
def test_malformed_documents(running, text):
    with pytest.raises(TragrFormatError):
        parse_tragr(text, running)


def test_endpoint_kinds_are_distinct():
    assert Src(0) != Tgt(0) and In(0, 0) != Out(0, 0)
    assert len({Edge(Src(0), Tgt(0), "A"), Edge(Src(0), In(0, 0), "A")}) == 2


def _dot_counts(text):
    names = set(re.findall(r"\b([stn]\d+) \[label", text))
    edges = re.findall(r"^\s+\w+ -> \w+ \[", text, re.M)
    return (sum(n[0] == "n" for n in names), sum(n[0] in "st" for n in names), len(edges))


def test_dot_examples(running, gamma):
    text = to_dot(evaluate(Empty()))
    assert text.startswith("digraph") and _dot_counts(text) == (0, 0, 0)
    assert text.count("rank=same") == 2
    assert _dot_counts(to_dot(ev("beta", running))) == (1, 7, 7)
    assert _dot_counts(to_dot(evaluate(gamma)))[0] == 7
    assert to_dot(evaluate(gamma)) == to_dot(evaluate(gamma))
    assert 'label="A"' in to_dot(ev("beta", running))


def _digraph(g):
    d = nx.MultiDiGraph()
    name = {Src: "s", Tgt: "t"}
    for e in g.edges:
        ends = [f"{name[type(x)]}{x.index}" if type(x) in name else f"n{x.node}" for x in (e.tail, e.head)]
        d.add_edge(*ends)
    return d


def test_maximal_paths_run_input_to_output():
    for seed in range(300):
        _, p = random_case(seed)
        g = evaluate(p)
        d = _digraph(g)
        sources = [f"s{i}" for i in range(len(g.source))]
        targets = [f"t{j}" for j in range(len(g.target))]
        for n in range(len(g.nodes)):
            assert any(nx.has_path(d, s, f"n{n}") for s in sources)
            assert any(nx.has_path(d, f"n{n}", t) for t in targets)
        assert nx.is_directed_acyclic_graph(d)


def test_structural_properties_of_random_terms():
    for seed in range(300):
        system, p = random_case(seed)
        g = evaluate(p)
        validate(g)
        assert (g.source, g.target) == (p.src, p.tgt)
        assert len(g.nodes) == rule_count(p)
        assert tragr_eq(evaluate(flatten(p)), g)
        assert parse_tragr(serialize_tragr(g), system) == g


@pytest.mark.parametrize("law", LAWS)
def test_law_soundness(law):
    rng = random.Random(f"tragr-{law}")
    for _ in range(60):
        system, _ = random_case(rng.randrange(10 ** 6))
        lhs, rhs = law_instance(rng, law, system)
        assert tragr_eq(evaluate(lhs), evaluate(rhs))


def test_rule_node_in_rule_tragr(running):
    g = evaluate(RuleSym(running.rules["alpha"]))
    assert g.nodes == (running.rules["alpha"],) and g.causal_edges() == []
