"""Containment, residuals, loath pairs and greedy normalisation of multisteps.

Rule occurrences of a multistep are identified by their index in
``Multistep.items``.  Positions in strings are 0-based and intervals are
half-open, so two occurrences overlap iff their intervals intersect.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

from .proofterm import Lit, Multistep, MultistepReduction, RuleSym
from .rewrite import RewriteError, show

OccurrenceSet = frozenset  # frozenset[int] of indices into Multistep.items


class NotComposable(RewriteError):
    pass


class InvalidOccurrence(RewriteError):
    pass


class StaleWitness(RewriteError):
    pass


class Interval(NamedTuple):
    start: int
    end: int

    def overlaps(self, other: Interval) -> bool:
        return max(self.start, other.start) < min(self.end, other.end)

    def __len__(self):
        return self.end - self.start


@dataclass(frozen=True)
class SwapWitness:
    """Occurrence ``occ`` of the second multistep can be pulled up to ``pulled_back``."""

    occ: int
    pulled_back: Interval


def _check(psi: Multistep, keep: Iterable[int]) -> frozenset:
    keep = frozenset(keep)
    for i in keep:
        if not (0 <= i < len(psi.items)) or not isinstance(psi.items[i], RuleSym):
            raise InvalidOccurrence(f"item {i} of {psi} is not a rule occurrence")
    return keep


def select(psi: Multistep, keep: Iterable[int]) -> Multistep:
    """The multistep contained in ``psi`` performing only the occurrences in ``keep``."""
    keep = _check(psi, keep)
    items = []
    for i, item in enumerate(psi.items):
        if isinstance(item, RuleSym) and i not in keep:
            items.extend(Lit(a) for a in item.rule.lhs)
        else:
            items.append(item)
    return Multistep(tuple(items))


def residual(psi: Multistep, keep: Iterable[int]) -> Multistep:
    """What remains of ``psi`` after ``select(psi, keep)`` has been performed."""
    keep = _check(psi, keep)
    items = []
    for i, item in enumerate(psi.items):
        if i in keep:
            items.extend(Lit(a) for a in item.rule.rhs)
        else:
            items.append(item)
    return Multistep(tuple(items))


def contained(psi: Multistep) -> list[Multistep]:
    """All multisteps contained in ``psi``, one per subset of its occurrences."""
    reds = psi.red_indices
    subsets = chain.from_iterable(combinations(reds, k) for k in range(len(reds) + 1))
    return [select(psi, s) for s in subsets]


def rule_intervals(m: Multistep, side: str = "source") -> list[tuple[str, Interval]]:
    """Where each rule occurrence of ``m`` sits in its source (or target) string."""
    if side not in ("source", "target"):
        raise ValueError(f"side must be 'source' or 'target', not {side!r}")
    out = []
    pos = 0
    for item in m.items:
        width = len(item.src if side == "source" else item.tgt)
        if isinstance(item, RuleSym):
            out.append((item.name, Interval(pos, pos + width)))
        pos += width
    return out


def _offsets(m: Multistep) -> tuple[list[int], list[int]]:
    """Source and target start position of every item of ``m``."""
    src, tgt = [], []
    s = t = 0
    for item in m.items:
        src.append(s)
        tgt.append(t)
        s += len(item.src)
        t += len(item.tgt)
    return src, tgt


def loath_witnesses(phi: Multistep, psi: Multistep) -> Iterator[SwapWitness]:
    """Every occurrence of ``psi`` whose source avoids all targets of ``phi``."""
    if phi.tgt != psi.src:
        raise NotComposable(f"target {show(phi.tgt)} of {phi} is not the source {show(psi.src)} of {psi}")
    targets = [iv for _, iv in rule_intervals(phi, "target")]
    src_at, tgt_at = _offsets(phi)
    # letter position in tgt(phi) -> position in src(phi), for positions copied by a letter
    pullback = {tgt_at[i]: src_at[i] for i, item in enumerate(phi.items) if isinstance(item, Lit)}
    pos = 0
    for j, item in enumerate(psi.items):
        width = len(item.src)
        if isinstance(item, RuleSym):
            iv = Interval(pos, pos + width)
            if not any(iv.overlaps(t) for t in targets):
                # nonempty right-hand sides keep the copied letters contiguous
                start = pullback[iv.start]
                yield SwapWitness(j, Interval(start, start + width))
        pos += width


def find_loath(phi: Multistep, psi: Multistep) -> SwapWitness | None:
    """Leftmost witness that ``phi . psi`` is a loath pair, or None if it is greedy."""
    return next(loath_witnesses(phi, psi), None)


def swap(phi: Multistep, psi: Multistep, w: SwapWitness) -> tuple[Multistep, Multistep]:
    """Pull occurrence ``w.occ`` of ``psi`` up into ``phi``."""
    if not (0 <= w.occ < len(psi.items)) or not isinstance(psi.items[w.occ], RuleSym):
        raise StaleWitness(f"item {w.occ} of {psi} is not a rule occurrence")
    red = psi.items[w.occ]
    src_at, _ = _offsets(phi)
    covered = [i for i, at in enumerate(src_at)
               if w.pulled_back.start <= at < w.pulled_back.end]
    if (len(covered) != len(red.rule.lhs)
            or any(not isinstance(phi.items[i], Lit) for i in covered)
            or tuple(phi.items[i].letter for i in covered) != red.rule.lhs):
        raise StaleWitness(f"{w} does not match {phi} . {psi}")
    first, last = covered[0], covered[-1]
    chi = Multistep(phi.items[:first] + (red,) + phi.items[last + 1:])
    rest = residual(psi, {w.occ})
    if chi.tgt != rest.src:
        raise StaleWitness(f"{w} does not match {phi} . {psi}")
    return chi, rest


def loath_pairs(r: MultistepReduction | Sequence[Multistep]) -> list[int]:
    """Indices ``i`` such that layers ``i`` and ``i + 1`` form a loath pair."""
    steps = list(r)
    return [i for i in range(len(steps) - 1) if find_loath(steps[i], steps[i + 1]) is not None]


def is_greedy(r: MultistepReduction) -> bool:
    return not loath_pairs(r)


def sr_measure(r: MultistepReduction | Sequence[Multistep]) -> tuple[int, ...]:
    """Rule counts per layer, last layer first; compare lexicographically."""
    return tuple(step.size for step in reversed(list(r)))


def greedy_normalize(r: MultistepReduction,
                     on_swap: Callable[[tuple, tuple], None] | None = None) -> MultistepReduction:
    """Swap exhaustively, then drop the layers left without rule occurrences.

    Emptied layers are kept while swapping, so the layer count is fixed and
    every swap decreases `sr_measure`; an empty layer followed by a nonempty
    one is always loath, hence only trailing empty layers survive.  After a
    swap at ``(i, i + 1)`` the scan resumes at ``(i - 1, i)``.  ``on_swap``
    receives the layers before and after each swap.
    """
    layers = list(r.steps)
    i = 0
    while i < len(layers) - 1:
        w = find_loath(layers[i], layers[i + 1])
        if w is None:
            i += 1
            continue
        before = tuple(layers)
        layers[i], layers[i + 1] = swap(layers[i], layers[i + 1], w)
        if on_swap is not None:
            on_swap(before, tuple(layers))
        i = max(i - 1, 0)
    return MultistepReduction.of(layers, r.source)
