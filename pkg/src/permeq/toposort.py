"""Topological multi-sorting: reading a tragr back as a greedy multistep reduction.

Each stage removes *all* minimal rule nodes at once.  They become the rule
occurrences of one multistep; their output ports become the source of the
remaining graph, and the process repeats until only a ladder is left.
"""

from __future__ import annotations

from dataclasses import dataclass

from .proofterm import Lit, Multistep, MultistepReduction, RuleSym
from .residuals import Interval
from .tragr import Edge, In, NotPlanarOrIllFormed, Out, Src, Tgt, Tragr


@dataclass(frozen=True)
class Layer:
    """Minimal nodes, left to right, with the source positions each one consumes."""

    nodes: tuple[int, ...]
    intervals: tuple[Interval, ...]


@dataclass(frozen=True)
class Stage:
    tragr: Tragr
    multistep: Multistep | None  # None for the final ladder
    origin: tuple[int, ...]  # node id in the original tragr of each node of ``tragr``


def minimal_layer(g: Tragr) -> Layer:
    if not g.nodes:
        raise ValueError("a ladder has no minimal layer")
    fed_by_node = {e.head.node for e in g.edges if isinstance(e.tail, Out) and isinstance(e.head, In)}
    found = []
    for n, rule in enumerate(g.nodes):
        if n in fed_by_node:
            continue
        starts = [g.edge_to[In(n, k)].tail.index for k in range(len(rule.lhs))]
        if starts != list(range(starts[0], starts[0] + len(starts))):
            raise NotPlanarOrIllFormed(
                f"inputs of minimal node {n} ({rule.name}) are not a contiguous, ordered interval")
        found.append((Interval(starts[0], starts[0] + len(starts)), n))
    if not found:
        raise NotPlanarOrIllFormed("the causal graph has a cycle")
    found.sort()
    return Layer(tuple(n for _, n in found), tuple(iv for iv, _ in found))


def _check_ladder(g: Tragr) -> None:
    if g.source != g.target or any(
            not isinstance(e.tail, Src) or not isinstance(e.head, Tgt) or e.tail.index != e.head.index
            for e in g.edges):
        raise NotPlanarOrIllFormed(
            "a tragr without rule nodes must be the ladder on its source (no crossing wires)")


def _step(g: Tragr, layer: Layer) -> tuple[Multistep, Tragr, list[int]]:
    """Peel off ``layer``: its multistep, the remaining tragr, and the surviving node ids."""
    starts = {iv.start: n for n, iv in zip(layer.nodes, layer.intervals)}
    peeled = set(layer.nodes)
    items = []
    src_map = {}  # old Src index -> new Src index
    out_base = {}  # peeled node -> new Src index of its first output
    i = pos = 0
    while i < len(g.source):
        if i in starts:
            n = starts[i]
            rule = g.nodes[n]
            items.append(RuleSym(rule))
            out_base[n] = pos
            pos += len(rule.rhs)
            i += len(rule.lhs)
        else:
            items.append(Lit(g.source[i]))
            src_map[i] = pos
            pos += 1
            i += 1
    phi = Multistep(tuple(items))

    kept = [n for n in range(len(g.nodes)) if n not in peeled]
    renum = {old: new for new, old in enumerate(kept)}
    edges = set()
    for e in g.edges:
        head = e.head
        if isinstance(head, In):
            if head.node in peeled:
                continue
            head = In(renum[head.node], head.port)
        tail = e.tail
        if isinstance(tail, Src):
            tail = Src(src_map[tail.index])
        elif tail.node in peeled:
            tail = Src(out_base[tail.node] + tail.port)
        else:
            tail = Out(renum[tail.node], tail.port)
        edges.add(Edge(tail, head, e.letter))
    rest = Tragr(phi.tgt, g.target, tuple(g.nodes[n] for n in kept), frozenset(edges))
    return phi, rest, kept


def ts_stages(g: Tragr) -> list[Stage]:
    """All stages of the read-back, ending with the ladder on the target."""
    stages = []
    origin = list(range(len(g.nodes)))
    while g.nodes:
        phi, rest, kept = _step(g, minimal_layer(g))
        stages.append(Stage(g, phi, tuple(origin)))
        origin = [origin[n] for n in kept]
        g = rest
    _check_ladder(g)
    stages.append(Stage(g, None, ()))
    return stages


def ts_order(g: Tragr) -> tuple[MultistepReduction, list[int]]:
    """The read-back together with the original node ids in the order they were read."""
    stages = ts_stages(g)
    order = []
    for stage in stages[:-1]:
        layer = minimal_layer(stage.tragr)
        order.extend(stage.origin[n] for n in layer.nodes)
    steps = tuple(stage.multistep for stage in stages[:-1])
    return MultistepReduction(g.source, steps), order


def ts(g: Tragr) -> MultistepReduction:
    """Topological multi-sort of ``g``: its unique greedy multistep reduction.

    Raises `NotPlanarOrIllFormed` if some stage has a minimal node whose
    inputs are not a contiguous interval, if the causal graph is cyclic, or
    if the final node-free graph is not a ladder.
    """
    stages = ts_stages(g)
    return MultistepReduction(g.source, tuple(stage.multistep for stage in stages[:-1]))
