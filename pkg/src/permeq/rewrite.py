"""Alphabets, strings, rules and string rewrite systems.

Strings are kept in monoid normal form only: a tuple of letter names, with
the empty tuple standing for the empty string.  Letters are whitespace
separated identifiers, so every string has exactly one reading.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_']*\Z")
EPS = "eps"

Letter = str
LString = tuple  # tuple[Letter, ...]


class RewriteError(Exception):
    """Base class for all errors raised by this package."""


class SystemSyntaxError(RewriteError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class EmptyRuleSide(RewriteError):
    """A rule with an empty left- or right-hand side (collapsing / ex nihilo)."""


class DuplicateRule(RewriteError):
    pass


class UndeclaredLetter(RewriteError):
    pass


class NameClash(RewriteError):
    pass


def is_identifier(token: str) -> bool:
    return bool(IDENT.match(token)) and token != EPS


def lstring(letters: str | Iterable[Letter]) -> LString:
    """Build a string from a whitespace separated text or an iterable of letters.

    >>> lstring("A B A A B")
    ('A', 'B', 'A', 'A', 'B')
    """
    if isinstance(letters, str):
        return tuple(letters.split())
    return tuple(letters)


def concat(*parts: LString) -> LString:
    return tuple(letter for part in parts for letter in part)


def show(s: LString) -> str:
    return " ".join(s) if s else EPS


@dataclass(frozen=True)
class Rule:
    name: str
    lhs: LString
    rhs: LString

    def __post_init__(self):
        if not self.lhs or not self.rhs:
            side = "left" if not self.lhs else "right"
            raise EmptyRuleSide(f"rule {self.name!r} has an empty {side}-hand side")

    def __str__(self):
        return f"{self.name}: {show(self.lhs)} -> {show(self.rhs)}"


@dataclass(frozen=True)
class RewriteSystem:
    alphabet: tuple[Letter, ...]
    rules: Mapping[str, Rule] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "rules", dict(self.rules))
        letters = set(self.alphabet)
        for letter in self.alphabet:
            if not is_identifier(letter):
                raise RewriteError(f"invalid letter name {letter!r}")
        if len(letters) != len(self.alphabet):
            raise RewriteError("alphabet lists a letter twice")
        for name, rule in self.rules.items():
            if name != rule.name:
                raise RewriteError(f"rule {rule.name!r} registered under {name!r}")
            if not is_identifier(name):
                raise RewriteError(f"invalid rule name {name!r}")
            if name in letters:
                raise NameClash(f"rule name {name!r} is also a letter")
            for letter in rule.lhs + rule.rhs:
                if letter not in letters:
                    raise UndeclaredLetter(
                        f"letter {letter!r} in rule {name!r} is not in the alphabet")

    def __hash__(self):
        return hash((self.alphabet, tuple(self.rules.values())))

    def rule(self, name: str) -> Rule:
        return self.rules[name]

    def __str__(self):
        lines = ["alphabet: " + " ".join(self.alphabet), "rules:"]
        lines += [f"  {rule}" for rule in self.rules.values()]
        return "\n".join(lines)


def make_system(alphabet: str | Iterable[Letter], rules: str | Iterable[Rule] = ()) -> RewriteSystem:
    """Convenience constructor.

    ``rules`` may be a sequence of `Rule` or a text such as
    ``"alpha: B B -> A; beta: A A B -> B A A B"``.
    """
    if isinstance(rules, str):
        parsed = []
        for chunk in filter(None, (c.strip() for c in rules.split(";"))):
            name, _, body = chunk.partition(":")
            lhs, _, rhs = body.partition("->")
            parsed.append(Rule(name.strip(), lstring(lhs), lstring(rhs)))
        rules = parsed
    table: dict[str, Rule] = {}
    for rule in rules:
        if rule.name in table:
            raise DuplicateRule(f"duplicate rule name {rule.name!r}")
        table[rule.name] = rule
    return RewriteSystem(lstring(alphabet), table)


def _tokens(line: str) -> list[tuple[str, int]]:
    """Split a line into (token, column) pairs; ':' and '->' are their own tokens."""
    text = line.split("#", 1)[0]
    out = []
    for match in re.finditer(r"->|:|(?:(?!->)[^\s:])+", text):
        out.append((match.group(), match.start() + 1))
    return out


def parse_system(text: str) -> RewriteSystem:
    """Parse the textual system format::

        alphabet: A B
        rules:
          alpha: B B -> A
          beta: A A B -> B A A B

    Raises `SystemSyntaxError` (with line and column), `EmptyRuleSide`,
    `DuplicateRule`, `UndeclaredLetter` or `NameClash`.
    """
    lines = [(n, _tokens(raw)) for n, raw in enumerate(text.splitlines(), 1)]
    lines = [(n, toks) for n, toks in lines if toks]
    if not lines:
        raise SystemSyntaxError("expected 'alphabet:'", 1, 1)

    n, toks = lines[0]
    if [t for t, _ in toks[:2]] != ["alphabet", ":"]:
        raise SystemSyntaxError("expected 'alphabet:'", n, toks[0][1])
    alphabet = []
    for tok, col in toks[2:]:
        if not is_identifier(tok):
            raise SystemSyntaxError(f"invalid letter {tok!r}", n, col)
        alphabet.append(tok)
    if not alphabet:
        raise SystemSyntaxError("alphabet must declare at least one letter", n, toks[-1][1])
    if len(set(alphabet)) != len(alphabet):
        raise SystemSyntaxError("letter declared twice", n, toks[0][1])

    if len(lines) < 2:
        raise SystemSyntaxError("expected 'rules:'", n + 1, 1)
    n, toks = lines[1]
    if [t for t, _ in toks] != ["rules", ":"]:
        raise SystemSyntaxError("expected 'rules:'", n, toks[0][1])

    declared = set(alphabet)
    rules: dict[str, Rule] = {}
    for n, toks in lines[2:]:
        words = [t for t, _ in toks]
        if len(words) < 2 or words[1] != ":":
            raise SystemSyntaxError("expected 'name: lhs -> rhs'", n, toks[0][1])
        name, name_col = toks[0]
        if not is_identifier(name):
            raise SystemSyntaxError(f"invalid rule name {name!r}", n, name_col)
        arrows = [col for tok, col in toks if tok == "->"]
        if len(arrows) != 1:
            col = arrows[1] if arrows else toks[-1][1]
            raise SystemSyntaxError("expected exactly one '->'", n, col)
        arrow = words.index("->")
        sides = (toks[2:arrow], toks[arrow + 1:])
        for side in sides:
            for tok, col in side:
                if tok == ":" or not is_identifier(tok):
                    raise SystemSyntaxError(f"unexpected token {tok!r}", n, col)
                if tok not in declared:
                    raise UndeclaredLetter(
                        f"{n}:{col}: letter {tok!r} in rule {name!r} is not in the alphabet")
        if name in rules:
            raise DuplicateRule(f"{n}:{name_col}: duplicate rule name {name!r}")
        if name in declared:
            raise NameClash(f"{n}:{name_col}: rule name {name!r} is also a letter")
        lhs, rhs = (tuple(t for t, _ in side) for side in sides)
        if not lhs or not rhs:
            side = "left" if not lhs else "right"
            raise EmptyRuleSide(f"{n}:{name_col}: rule {name!r} has an empty {side}-hand side")
        rules[name] = Rule(name, lhs, rhs)
    return RewriteSystem(tuple(alphabet), rules)
