"""Trace graphs (tragrs): port graphs from a source string to a target string.

The interface (the straight-line dags of the source and target strings) is
not stored as graph structure: a tragr keeps the two strings, its rule nodes
and the letter-typed edges between

* source positions ``Src(i)`` and node output ports ``Out(n, j)`` (tails),
* target positions ``Tgt(i)`` and node input ports ``In(n, k)`` (heads).

Ports are numbered left to right in the order of the rule's sides.
Vertical composition splices the edge arriving at an intermediate position
with the edge leaving it, which is exactly what eliding the intermediate
interface amounts to.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Union

from .proofterm import Comp, Empty, Juxt, Lit, ProofTerm, RuleSym
from .rewrite import LString, Rule, RewriteError, RewriteSystem, concat, show


class NotPlanarOrIllFormed(RewriteError):
    pass


class TragrFormatError(RewriteError):
    pass


class TragrNotComposable(RewriteError):
    pass


@dataclass(frozen=True, slots=True)
class Src:
    index: int


@dataclass(frozen=True, slots=True)
class Tgt:
    index: int


@dataclass(frozen=True, slots=True)
class In:
    node: int
    port: int


@dataclass(frozen=True, slots=True)
class Out:
    node: int
    port: int


Endpoint = Union[Src, Tgt, In, Out]

_KIND = {Src: "src", Tgt: "tgt", In: "in", Out: "out"}
_ORDER = {Src: 0, Out: 1, In: 2, Tgt: 3}


def _key(e: Endpoint) -> tuple:
    if isinstance(e, (Src, Tgt)):
        return _ORDER[type(e)], e.index
    return _ORDER[type(e)], e.node, e.port


class Edge(NamedTuple):
    tail: Endpoint
    head: Endpoint
    letter: str

    def key(self) -> tuple:
        return _key(self.tail), _key(self.head)


@dataclass(frozen=True)
class Tragr:
    source: LString
    target: LString
    nodes: tuple[Rule, ...]
    edges: frozenset[Edge]

    @cached_property
    def edge_from(self) -> dict[Endpoint, Edge]:
        return {e.tail: e for e in self.edges}

    @cached_property
    def edge_to(self) -> dict[Endpoint, Edge]:
        return {e.head: e for e in self.edges}

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=Edge.key)

    def causal_edges(self) -> list[tuple[int, int]]:
        """Node-to-node edges, with multiplicity."""
        return sorted((e.tail.node, e.head.node) for e in self.edges
                      if isinstance(e.tail, Out) and isinstance(e.head, In))

    def __str__(self):
        return (f"tragr {show(self.source)} => {show(self.target)} "
                f"[{', '.join(rule.name for rule in self.nodes)}]")


def ladder(s: LString) -> Tragr:
    """The tragr of the empty computation on ``s``."""
    return Tragr(tuple(s), tuple(s), (), frozenset(Edge(Src(i), Tgt(i), a) for i, a in enumerate(s)))


def rule_tragr(rule: Rule) -> Tragr:
    edges = [Edge(Src(i), In(0, i), a) for i, a in enumerate(rule.lhs)]
    edges += [Edge(Out(0, j), Tgt(j), a) for j, a in enumerate(rule.rhs)]
    return Tragr(rule.lhs, rule.rhs, (rule,), frozenset(edges))


def _shift(e: Endpoint, src: int, tgt: int, node: int) -> Endpoint:
    if isinstance(e, Src):
        return Src(e.index + src)
    if isinstance(e, Tgt):
        return Tgt(e.index + tgt)
    return type(e)(e.node + node, e.port)


def juxt_tragr(g: Tragr, h: Tragr) -> Tragr:
    ds, dt, dn = len(g.source), len(g.target), len(g.nodes)
    moved = (Edge(_shift(e.tail, ds, dt, dn), _shift(e.head, ds, dt, dn), e.letter) for e in h.edges)
    return Tragr(concat(g.source, h.source), concat(g.target, h.target),
                 g.nodes + h.nodes, g.edges.union(moved))


def vcomp_tragr(g: Tragr, h: Tragr) -> Tragr:
    """Connect the output of ``g`` to the input of ``h`` and elide the interface between."""
    if g.target != h.source:
        raise TragrNotComposable(f"target {show(g.target)} is not the source {show(h.source)}")
    dn = len(g.nodes)
    into = g.edge_to
    edges = {e for e in g.edges if not isinstance(e.head, Tgt)}
    for e in h.edges:
        head = _shift(e.head, 0, 0, dn)
        if isinstance(e.tail, Src):
            edges.add(Edge(into[Tgt(e.tail.index)].tail, head, e.letter))
        else:
            edges.add(Edge(_shift(e.tail, 0, 0, dn), head, e.letter))
    return Tragr(g.source, h.target, g.nodes + h.nodes, frozenset(edges))


def evaluate(p: ProofTerm) -> Tragr:
    """The tragr of a proof term (letters are ladders, rules single nodes)."""
    if isinstance(p, Empty):
        return ladder(())
    if isinstance(p, Lit):
        return ladder(p.src)
    if isinstance(p, RuleSym):
        return rule_tragr(p.rule)
    if isinstance(p, Juxt):
        return juxt_tragr(evaluate(p.left), evaluate(p.right))
    if isinstance(p, Comp):
        return vcomp_tragr(evaluate(p.top), evaluate(p.bottom))
    if hasattr(p, "to_term"):
        return evaluate(p.to_term())
    raise TypeError(f"cannot evaluate {p!r}")


def tragr_eq(g: Tragr, h: Tragr) -> bool:
    """Equality up to isomorphism respecting the interface.

    Both tragrs are read back into their greedy multistep reductions, which
    are equal exactly when the graphs are.
    """
    from .toposort import ts

    return g.source == h.source and g.target == h.target and ts(g) == ts(h)


def relabel(g: Tragr, order: list[int]) -> Tragr:
    """Renumber nodes so that old node ``order[k]`` becomes node ``k``."""
    new = {old: k for k, old in enumerate(order)}

    def move(e: Endpoint) -> Endpoint:
        return type(e)(new[e.node], e.port) if isinstance(e, (In, Out)) else e

    return Tragr(g.source, g.target, tuple(g.nodes[old] for old in order),
                 frozenset(Edge(move(e.tail), move(e.head), e.letter) for e in g.edges))


def check_structure(g: Tragr) -> None:
    """Degree, port typing and letter agreement; raises `NotPlanarOrIllFormed`."""
    expected = {Src(i): a for i, a in enumerate(g.source)}
    expected.update((Tgt(j), a) for j, a in enumerate(g.target))
    for n, rule in enumerate(g.nodes):
        expected.update((In(n, k), a) for k, a in enumerate(rule.lhs))
        expected.update((Out(n, k), a) for k, a in enumerate(rule.rhs))
    seen = set()
    for e in g.edges:
        if not isinstance(e.tail, (Src, Out)) or not isinstance(e.head, (Tgt, In)):
            raise NotPlanarOrIllFormed(f"edge {e} does not run from an output to an input")
        for end in (e.tail, e.head):
            if end not in expected:
                raise NotPlanarOrIllFormed(f"edge {e} uses a nonexistent port {end}")
            if end in seen:
                raise NotPlanarOrIllFormed(f"port {end} has more than one edge")
            if expected[end] != e.letter:
                raise NotPlanarOrIllFormed(
                    f"edge {e} carries {e.letter!r} but port {end} has type {expected[end]!r}")
            seen.add(end)
    missing = set(expected) - seen
    if missing:
        raise NotPlanarOrIllFormed(f"dangling ports: {sorted(missing, key=_key)}")


def validate(g: Tragr) -> None:
    """Check every tragr invariant, including that reading back reproduces ``g``."""
    from .toposort import ts_order

    check_structure(g)
    r, order = ts_order(g)
    if relabel(g, order) != evaluate(r.to_term()):
        raise NotPlanarOrIllFormed("the read-back does not reproduce the graph")


# -- serialisation ----------------------------------------------------------

def _endpoint_json(e: Endpoint) -> dict:
    if isinstance(e, (Src, Tgt)):
        return {"kind": _KIND[type(e)], "index": e.index}
    return {"kind": _KIND[type(e)], "node": e.node, "port": e.port}


def to_json(g: Tragr) -> dict:
    return {
        "source": list(g.source),
        "target": list(g.target),
        "nodes": [{"id": n, "rule": rule.name} for n, rule in enumerate(g.nodes)],
        "edges": [{"from": _endpoint_json(e.tail), "to": _endpoint_json(e.head), "letter": e.letter}
                  for e in g.sorted_edges()],
    }


def serialize_tragr(g: Tragr) -> str:
    return json.dumps(to_json(g), indent=2) + "\n"


def _endpoint(doc) -> Endpoint:
    try:
        kind = doc["kind"]
        if kind in ("src", "tgt"):
            index = doc["index"]
            if not isinstance(index, int) or isinstance(index, bool):
                raise TragrFormatError(f"bad index in {doc!r}")
            return Src(index) if kind == "src" else Tgt(index)
        if kind in ("in", "out"):
            node, port = doc["node"], doc["port"]
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (node, port)):
                raise TragrFormatError(f"bad node/port in {doc!r}")
            return In(node, port) if kind == "in" else Out(node, port)
    except (KeyError, TypeError) as exc:
        raise TragrFormatError(f"malformed endpoint {doc!r}") from exc
    raise TragrFormatError(f"unknown endpoint kind in {doc!r}")


def from_json(doc, system: RewriteSystem) -> Tragr:
    try:
        source = tuple(doc["source"])
        target = tuple(doc["target"])
        node_docs = sorted(doc["nodes"], key=lambda d: d["id"])
        edge_docs = list(doc["edges"])
    except (KeyError, TypeError) as exc:
        raise TragrFormatError(f"malformed tragr document: {exc}") from exc
    for letter in source + target:
        if letter not in system.alphabet:
            raise TragrFormatError(f"unknown letter {letter!r}")
    if [d["id"] for d in node_docs] != list(range(len(node_docs))):
        raise TragrFormatError("node ids must be 0, 1, ..., n-1")
    nodes = []
    for d in node_docs:
        if d.get("rule") not in system.rules:
            raise TragrFormatError(f"unknown rule {d.get('rule')!r}")
        nodes.append(system.rules[d["rule"]])
    edges = []
    for d in edge_docs:
        if not isinstance(d, dict) or "letter" not in d:
            raise TragrFormatError(f"malformed edge {d!r}")
        edges.append(Edge(_endpoint(d.get("from")), _endpoint(d.get("to")), d["letter"]))
    if len(set(edges)) != len(edges):
        raise NotPlanarOrIllFormed("duplicate edge")
    g = Tragr(source, target, tuple(nodes), frozenset(edges))
    validate(g)
    return g


def parse_tragr(text: str, system: RewriteSystem) -> Tragr:
    """Read a JSON tragr document and check all invariants.

    Raises `TragrFormatError` for malformed documents and
    `NotPlanarOrIllFormed` for graphs that are not tragrs.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TragrFormatError(f"invalid JSON: {exc}") from exc
    return from_json(doc, system)


def to_dot(g: Tragr, name: str = "tragr") -> str:
    """GraphViz rendering: source row on top, rule nodes, target row at the bottom."""
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  ordering=out;"]
    row = " ".join(f's{i} [label="{a}", shape=plaintext];' for i, a in enumerate(g.source))
    lines.append(f"  {{ rank=same; {row} }}")
    for n, rule in enumerate(g.nodes):
        lines.append(f'  n{n} [label="{rule.name}", shape=box];')
    row = " ".join(f't{j} [label="{a}", shape=plaintext];' for j, a in enumerate(g.target))
    lines.append(f"  {{ rank=same; {row} }}")

    def name_of(e: Endpoint) -> str:
        if isinstance(e, Src):
            return f"s{e.index}"
        if isinstance(e, Tgt):
            return f"t{e.index}"
        return f"n{e.node}"

    for e in g.sorted_edges():
        attrs = [f'label="{e.letter}"']
        if isinstance(e.tail, Out):
            attrs.append(f"taillabel={e.tail.port}")
        if isinstance(e.head, In):
            attrs.append(f"headlabel={e.head.port}")
        lines.append(f"  {name_of(e.tail)} -> {name_of(e.head)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
