"""Proof terms over a string rewrite system.

A proof term is built from the empty string, letters, rule symbols,
juxtaposition (horizontal composition) and ``.`` (vertical composition).
Sources and targets are computed once, at construction, and vertical
composition is rejected unless the target of the top part equals the source
of the bottom part as strings.

Two flat forms are used by the rest of the package:

* `Multistep` -- a proof term without vertical composition, stored as the
  left-to-right sequence of its letters and rule symbols.
* `MultistepReduction` -- a source string and a sequence of nonempty
  multisteps, each starting where the previous one ended.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence, Union

from .rewrite import EPS, LString, Rule, RewriteError, RewriteSystem, concat, show


class ProofTermSyntaxError(RewriteError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


class UnknownIdentifier(RewriteError):
    pass


class CompositionMismatch(RewriteError):
    """Vertical composition of terms whose target and source differ."""


class NotAMultistep(RewriteError):
    pass


class NotAReduction(RewriteError):
    pass


@dataclass(frozen=True)
class Empty:
    src: LString = field(default=(), init=False, repr=False, compare=False)
    tgt: LString = field(default=(), init=False, repr=False, compare=False)


@dataclass(frozen=True)
class Lit:
    letter: str
    src: LString = field(init=False, repr=False, compare=False)
    tgt: LString = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "src", (self.letter,))
        object.__setattr__(self, "tgt", (self.letter,))


@dataclass(frozen=True)
class RuleSym:
    rule: Rule
    src: LString = field(init=False, repr=False, compare=False)
    tgt: LString = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "src", self.rule.lhs)
        object.__setattr__(self, "tgt", self.rule.rhs)

    @property
    def name(self) -> str:
        return self.rule.name


@dataclass(frozen=True)
class Juxt:
    left: ProofTerm
    right: ProofTerm
    src: LString = field(init=False, repr=False, compare=False)
    tgt: LString = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "src", concat(self.left.src, self.right.src))
        object.__setattr__(self, "tgt", concat(self.left.tgt, self.right.tgt))


@dataclass(frozen=True)
class Comp:
    top: ProofTerm
    bottom: ProofTerm
    src: LString = field(init=False, repr=False, compare=False)
    tgt: LString = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.top.tgt != self.bottom.src:
            raise CompositionMismatch(
                f"target {show(self.top.tgt)} of {pretty_print(self.top)!r} does not match "
                f"source {show(self.bottom.src)} of {pretty_print(self.bottom)!r}")
        object.__setattr__(self, "src", self.top.src)
        object.__setattr__(self, "tgt", self.bottom.tgt)


ProofTerm = Union[Empty, Lit, RuleSym, Juxt, Comp]
Item = Union[Lit, RuleSym]


def src_tgt(p: ProofTerm) -> tuple[LString, LString]:
    return p.src, p.tgt


def juxt(*parts: ProofTerm) -> ProofTerm:
    """Right-nested juxtaposition of ``parts``; `Empty` when there are none."""
    if not parts:
        return Empty()
    term = parts[-1]
    for part in reversed(parts[:-1]):
        term = Juxt(part, term)
    return term


def comp(*parts: ProofTerm) -> ProofTerm:
    """Right-nested vertical composition of ``parts``."""
    if not parts:
        raise ValueError("comp() needs at least one term")
    term = parts[-1]
    for part in reversed(parts[:-1]):
        term = Comp(part, term)
    return term


def string_term(s: LString) -> ProofTerm:
    """The empty multistep on ``s`` as a proof term."""
    return juxt(*(Lit(a) for a in s))


def rule_count(p: ProofTerm) -> int:
    if isinstance(p, RuleSym):
        return 1
    if isinstance(p, Juxt):
        return rule_count(p.left) + rule_count(p.right)
    if isinstance(p, Comp):
        return rule_count(p.top) + rule_count(p.bottom)
    return 0


def has_comp(p: ProofTerm) -> bool:
    if isinstance(p, Comp):
        return True
    if isinstance(p, Juxt):
        return has_comp(p.left) or has_comp(p.right)
    return False


@dataclass(frozen=True)
class Multistep:
    """A single parallel layer: letters and rule symbols, left to right."""

    items: tuple[Item, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    @classmethod
    def identity(cls, s: LString) -> Multistep:
        return cls(tuple(Lit(a) for a in s))

    @cached_property
    def src(self) -> LString:
        return concat(*(item.src for item in self.items))

    @cached_property
    def tgt(self) -> LString:
        return concat(*(item.tgt for item in self.items))

    @property
    def red_indices(self) -> list[int]:
        return [i for i, item in enumerate(self.items) if isinstance(item, RuleSym)]

    @property
    def size(self) -> int:
        """Number of rule occurrences."""
        return sum(isinstance(item, RuleSym) for item in self.items)

    def is_empty(self) -> bool:
        return self.size == 0

    def to_term(self) -> ProofTerm:
        return juxt(*self.items)

    def __str__(self):
        return pretty_print(self.to_term())


@dataclass(frozen=True)
class MultistepReduction:
    source: LString
    steps: tuple[Multistep, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "steps", tuple(self.steps))
        current = self.source
        for n, step in enumerate(self.steps):
            if step.is_empty():
                raise NotAReduction(f"layer {n} of a multistep reduction has no rule occurrence")
            if step.src != current:
                raise CompositionMismatch(
                    f"layer {n} starts at {show(step.src)} but the previous layer ends at {show(current)}")
            current = step.tgt

    @classmethod
    def of(cls, steps: Sequence[Multistep], source: LString | None = None) -> MultistepReduction:
        """Build from layers, dropping the rule-free ones."""
        if source is None:
            if not steps:
                raise ValueError("source required for an empty reduction")
            source = steps[0].src
        return cls(source, tuple(s for s in steps if not s.is_empty()))

    @property
    def target(self) -> LString:
        return self.steps[-1].tgt if self.steps else self.source

    @property
    def src(self) -> LString:
        return self.source

    @property
    def tgt(self) -> LString:
        return self.target

    def __len__(self):
        return len(self.steps)

    def __iter__(self) -> Iterator[Multistep]:
        return iter(self.steps)

    def is_reduction(self) -> bool:
        """Every layer is a single step."""
        return all(step.size == 1 for step in self.steps)

    def then(self, other: MultistepReduction) -> MultistepReduction:
        if self.target != other.source:
            raise CompositionMismatch(
                f"cannot compose: {show(self.target)} vs {show(other.source)}")
        return MultistepReduction(self.source, self.steps + other.steps)

    def to_term(self) -> ProofTerm:
        if not self.steps:
            return string_term(self.source)
        return comp(*(step.to_term() for step in self.steps))

    def __str__(self):
        return pretty_print(self.to_term())


class Kind(enum.Enum):
    EMPTY_MULTISTEP = "EmptyMultistep"
    STEP = "Step"
    MULTISTEP = "Multistep"
    REDUCTION = "Reduction"
    MULTISTEP_REDUCTION = "MultistepReduction"
    GENERAL = "General"


def _spine(p: ProofTerm) -> list[ProofTerm] | None:
    """Leaves of a right-associated vertical composition, or None."""
    leaves = []
    while isinstance(p, Comp):
        if has_comp(p.top):
            return None
        leaves.append(p.top)
        p = p.bottom
    if has_comp(p):
        return None
    leaves.append(p)
    return leaves


def classify(p: ProofTerm) -> Kind:
    """Most specific class of ``p``; a lone step counts as `Kind.STEP`."""
    if not has_comp(p):
        n = rule_count(p)
        return Kind.EMPTY_MULTISTEP if n == 0 else Kind.STEP if n == 1 else Kind.MULTISTEP
    leaves = _spine(p)
    if leaves is None:
        return Kind.GENERAL
    counts = [rule_count(leaf) for leaf in leaves]
    if all(c == 1 for c in counts):
        return Kind.REDUCTION
    if all(c >= 1 for c in counts):
        return Kind.MULTISTEP_REDUCTION
    return Kind.GENERAL


def _items(p: ProofTerm) -> Iterator[Item]:
    if isinstance(p, (Lit, RuleSym)):
        yield p
    elif isinstance(p, Juxt):
        yield from _items(p.left)
        yield from _items(p.right)
    elif isinstance(p, Comp):
        raise NotAMultistep(f"{pretty_print(p)!r} contains a vertical composition")


def to_multistep(p: ProofTerm) -> Multistep:
    return Multistep(tuple(_items(p)))


def _layers(p: ProofTerm) -> Iterator[ProofTerm]:
    if isinstance(p, Comp):
        yield from _layers(p.top)
        yield from _layers(p.bottom)
    else:
        yield p


def to_reduction(p: ProofTerm) -> MultistepReduction:
    """Read a reduction-shaped term as a `MultistepReduction`.

    Vertical compositions may be nested either way; rule-free layers are
    dropped.  Raises `NotAReduction` when a composition occurs below a
    juxtaposition.
    """
    layers = []
    for leaf in _layers(p):
        if has_comp(leaf):
            raise NotAReduction(f"{pretty_print(p)!r} has a vertical composition inside a juxtaposition")
        layers.append(to_multistep(leaf))
    return MultistepReduction.of(layers, p.src)


# -- parsing and printing ---------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_']*)|(\()|(\))|(\.))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    text = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ProofTermSyntaxError(f"unexpected character {text[col - 1]!r}", col)
        tokens.append((m.group(m.lastindex), m.start(m.lastindex) + 1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, system: RewriteSystem):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.system = system
        self.letters = set(system.alphabet)

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def column(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return self.tokens[-1][1] + len(self.tokens[-1][0]) if self.tokens else 1

    def term(self) -> ProofTerm:
        parts = [self.seq()]
        while self.peek() == ".":
            self.pos += 1
            parts.append(self.seq())
        return comp(*parts)

    def seq(self) -> ProofTerm:
        atoms = [self.atom()]
        while self.peek() not in (None, ".", ")"):
            atoms.append(self.atom())
        return juxt(*atoms)

    def atom(self) -> ProofTerm:
        tok = self.peek()
        col = self.column()
        if tok is None:
            raise ProofTermSyntaxError("unexpected end of input", col)
        self.pos += 1
        if tok == "(":
            inner = self.term()
            if self.peek() != ")":
                raise ProofTermSyntaxError("expected ')'", self.column())
            self.pos += 1
            return inner
        if tok in (")", "."):
            raise ProofTermSyntaxError(f"unexpected {tok!r}", col)
        if tok == EPS:
            return Empty()
        if tok in self.letters:
            return Lit(tok)
        if tok in self.system.rules:
            return RuleSym(self.system.rules[tok])
        raise UnknownIdentifier(f"column {col}: {tok!r} is neither a letter nor a rule")


def parse_proofterm(text: str, system: RewriteSystem) -> ProofTerm:
    """Parse ``text`` against ``system``.

    Juxtaposition binds tighter than ``.``; both associate to the right.
    """
    parser = _Parser(text, system)
    term = parser.term()
    if parser.peek() is not None:
        raise ProofTermSyntaxError(f"unexpected {parser.peek()!r}", parser.column())
    return term


def pretty_print(p: ProofTerm) -> str:
    if isinstance(p, Empty):
        return EPS
    if isinstance(p, Lit):
        return p.letter
    if isinstance(p, RuleSym):
        return p.name
    if isinstance(p, Juxt):
        left = pretty_print(p.left)
        if isinstance(p.left, (Juxt, Comp)):
            left = f"({left})"
        right = pretty_print(p.right)
        if isinstance(p.right, Comp):
            right = f"({right})"
        return f"{left} {right}"
    top = pretty_print(p.top)
    if isinstance(p.top, Comp):
        top = f"({top})"
    return f"{top} . {pretty_print(p.bottom)}"

