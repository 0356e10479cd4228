"""Deciding permutation equivalence of proof terms.

`equiv` compares canonical greedy forms obtained through the tragr route
(evaluate, then topologically multi-sort).  `canonical_greedy_by_swapping`
reaches the same form by sequentialising and swapping, and `oracle_equiv` is
a brute-force search over the equivalence laws that is meant for testing
only: it can confirm an equivalence but never refute one.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .logicality import flatten
from .proofterm import (Comp, Empty, Juxt, Lit, MultistepReduction, ProofTerm, RuleSym)
from .residuals import greedy_normalize
from .rewrite import LString, Rule, concat
from .toposort import ts
from .tragr import evaluate


def canonical_greedy(p: ProofTerm) -> MultistepReduction:
    """The unique greedy multistep reduction permutation equivalent to ``p``."""
    return ts(evaluate(p))


def canonical_greedy_by_swapping(p: ProofTerm) -> MultistepReduction:
    return greedy_normalize(flatten(p))


def equiv(p: ProofTerm, q: ProofTerm) -> bool:
    return p.src == q.src and p.tgt == q.tgt and canonical_greedy(p) == canonical_greedy(q)


# -- brute-force oracle -----------------------------------------------------
#
# Terms are searched modulo the unit and associativity laws by keeping them
# in a flat form: a horizontal sequence (tuple) of letters, rules and
# vertical blocks, where a block holds two or more layers, none of which is
# rule-free or itself a single block.  Only the exchange law then has to be
# applied explicitly, in both directions.

@dataclass(frozen=True)
class Block:
    layers: tuple[tuple, ...]


Element = Union[str, Rule, Block]
Flat = tuple  # tuple[Element, ...]


@lru_cache(maxsize=None)
def _src(x: Element | Flat) -> LString:
    if isinstance(x, str):
        return (x,)
    if isinstance(x, Rule):
        return x.lhs
    if isinstance(x, Block):
        return _src(x.layers[0])
    return concat(*(_src(e) for e in x))


@lru_cache(maxsize=None)
def _tgt(x: Element | Flat) -> LString:
    if isinstance(x, str):
        return (x,)
    if isinstance(x, Rule):
        return x.rhs
    if isinstance(x, Block):
        return _tgt(x.layers[-1])
    return concat(*(_tgt(e) for e in x))


def _layers(h: Flat) -> list[Flat]:
    if len(h) == 1 and isinstance(h[0], Block):
        return list(h[0].layers)
    return [h]


def _vertical(*parts: Flat) -> Flat:
    """Flat form of the vertical composition of ``parts``."""
    layers = [layer for part in parts for layer in _layers(part)]
    kept = [layer for layer in layers if not all(isinstance(e, str) for e in layer)]
    if not kept:
        return layers[0]
    if len(kept) == 1:
        return kept[0]
    return (Block(tuple(kept)),)


def flat(p: ProofTerm) -> Flat:
    if isinstance(p, Empty):
        return ()
    if isinstance(p, Lit):
        return (p.letter,)
    if isinstance(p, RuleSym):
        return (p.rule,)
    if isinstance(p, Juxt):
        return flat(p.left) + flat(p.right)
    if isinstance(p, Comp):
        return _vertical(flat(p.top), flat(p.bottom))
    raise TypeError(f"not a proof term: {p!r}")


def _as_compositions(h: Flat) -> Iterator[tuple[Flat, Flat]]:
    """Ways of reading ``h`` as a vertical composition ``top . bottom``."""
    yield _src(h), h
    yield h, _tgt(h)
    if len(h) == 1 and isinstance(h[0], Block):
        layers = h[0].layers
        for k in range(1, len(layers)):
            yield _vertical(*layers[:k]), _vertical(*layers[k:])


def _block_moves(block: Block) -> Iterator[Flat]:
    layers = block.layers
    for k in range(len(layers) - 1):
        upper, lower = layers[k], layers[k + 1]
        # (g d) . (z e)  ->  (g . z) (d . e)
        for i in range(len(upper) + 1):
            g, d = upper[:i], upper[i:]
            for j in range(len(lower) + 1):
                z, e = lower[:j], lower[j:]
                if _tgt(g) != _src(z) or (not g and not z) or (not d and not e):
                    continue
                merged = _vertical(g, z) + _vertical(d, e)
                yield _vertical(*layers[:k], merged, *layers[k + 2:])
    for k, layer in enumerate(layers):
        for changed in successors(layer):
            yield _vertical(*layers[:k], changed, *layers[k + 1:])


def successors(h: Flat) -> Iterator[Flat]:
    """Terms one exchange-law application away from ``h``, in either direction."""
    for idx, e in enumerate(h):
        if isinstance(e, Block):
            for fragment in _block_moves(e):
                yield h[:idx] + fragment + h[idx + 1:]
    # (g . z) (d . e)  ->  (g d) . (z e)
    n = len(h)
    for a in range(n):
        for b in range(a + 1, n):
            left = h[a:b]
            for c in range(b + 1, n + 1):
                right = h[b:c]
                for g, z in _as_compositions(left):
                    for d, e in _as_compositions(right):
                        yield h[:a] + _vertical(g + d, z + e) + h[c:]


class Verdict(enum.Enum):
    EQUIVALENT = "Equivalent"
    NOT_PROVEN = "NotProvenWithinBudget"


def oracle_search(p: ProofTerm, q: ProofTerm, budget: int = 10_000) -> tuple[Verdict, int]:
    """Breadth-first search from ``p`` for ``q`` using the equivalence laws.

    Returns the verdict and the number of terms expanded; ``budget`` bounds
    that number.
    """
    if p.src != q.src or p.tgt != q.tgt:
        return Verdict.NOT_PROVEN, 0
    start, goal = flat(p), flat(q)
    if start == goal:
        return Verdict.EQUIVALENT, 0
    seen = {start}
    queue = deque([start])
    expanded = 0
    while queue and expanded < budget:
        h = queue.popleft()
        expanded += 1
        for nxt in successors(h):
            if nxt == goal:
                return Verdict.EQUIVALENT, expanded
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return Verdict.NOT_PROVEN, expanded


def oracle_equiv(p: ProofTerm, q: ProofTerm, budget: int = 10_000) -> Verdict:
    return oracle_search(p, q, budget)[0]
