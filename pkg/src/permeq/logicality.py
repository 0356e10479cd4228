"""Turning an arbitrary proof term into an equivalent single-step reduction."""

from __future__ import annotations

from .proofterm import (Comp, Empty, Juxt, Lit, Multistep, MultistepReduction, ProofTerm,
                        RuleSym)
from .rewrite import LString, concat


def embed(r: MultistepReduction, prefix: LString = (), suffix: LString = ()) -> MultistepReduction:
    """Put every layer of ``r`` in the context ``prefix _ suffix``."""
    before = tuple(Lit(a) for a in prefix)
    after = tuple(Lit(a) for a in suffix)
    return MultistepReduction(
        concat(prefix, r.source, suffix),
        tuple(Multistep(before + step.items + after) for step in r.steps))


def flatten(p: ProofTerm) -> MultistepReduction:
    """A reduction (one rule occurrence per layer) permutation equivalent to ``p``.

    Juxtapositions are sequentialised left component first: for ``p q`` the
    steps of ``p`` run in the context ``_ src(q)``, followed by those of ``q``
    in the context ``tgt(p) _``.
    """
    if isinstance(p, (Empty, Lit)):
        return MultistepReduction(p.src)
    if isinstance(p, RuleSym):
        return MultistepReduction(p.src, (Multistep((p,)),))
    if isinstance(p, Juxt):
        left, right = flatten(p.left), flatten(p.right)
        return embed(left, suffix=p.right.src).then(embed(right, prefix=p.left.tgt))
    if isinstance(p, Comp):
        return flatten(p.top).then(flatten(p.bottom))
    raise TypeError(f"not a proof term: {p!r}")
