"""Concrete syntax for formulas and traces, plus the random generator.

Grammar, loosest to tightest: `|`, `&` (both left-associative), then
`U[a,b]` / `R[a,b]` (right-associative), then the prefix operators `!`,
`F[a,b]`, `G[a,b]`, then atoms `true`, `false`, `p<digits>` and
parentheses.  Whitespace is insignificant.  Interval bounds are decimal
naturals checked for a <= b at parse time.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .formula import (
    And,
    FalseC,
    Future,
    Global,
    MltlFormula,
    Not,
    Or,
    Prop,
    Release,
    Trace,
    TrueC,
    Until,
)

__all__ = [
    "ParseError",
    "parse_formula",
    "pretty",
    "parse_trace",
    "FormulaGenParams",
    "random_formula",
    "iter_random_formulas",
    "temporal_depth",
    "max_interval_bound",
]


class ParseError(ValueError):
    """Syntax diagnostic with a 1-based position and a coarse kind.

    kind is "lexical" for bad characters, "syntax" for structural
    errors, and "interval" for bounds violating a <= b.
    """

    def __init__(self, message: str, line: int, column: int, kind: str = "syntax"):
        self.line = line
        self.column = column
        self.kind = kind
        super().__init__(f"{message} at line {line}, column {column}")


_TOKEN = re.compile(r"[A-Za-z_][A-Za-z_0-9]*|\d+|[!&|()\[\],]|\s+|.")
_KEYWORDS = {"true", "false", "F", "G", "U", "R"}


@dataclass(frozen=True)
class _Token:
    kind: str  # one of the punctuation chars, "true", "false", "F/G/U/R", "prop", "nat", "end"
    value: int
    line: int
    column: int


def _lex(text: str) -> list[_Token]:
    tokens = []
    line, column = 1, 1
    for m in _TOKEN.finditer(text):
        chunk = m.group()
        here = (line, column)
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            column = len(chunk) - chunk.rfind("\n")
        else:
            column += len(chunk)
        if chunk.isspace():
            continue
        if chunk in _KEYWORDS or chunk in "!&|()[],":
            tokens.append(_Token(chunk, 0, *here))
        elif chunk.isdigit():
            tokens.append(_Token("nat", int(chunk), *here))
        elif re.fullmatch(r"p\d+", chunk):
            tokens.append(_Token("prop", int(chunk[1:]), *here))
        else:
            raise ParseError(f"unexpected {chunk!r}", *here, kind="lexical")
    tokens.append(_Token("end", 0, line, column))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: str) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != kind:
            raise ParseError(
                f"expected {kind!r}, found {tok.kind!r}", tok.line, tok.column
            )
        self.pos += 1
        return tok

    def interval(self) -> tuple[int, int]:
        opener = self.take("[")
        a = self.take("nat").value
        self.take(",")
        b = self.take("nat").value
        self.take("]")
        if a > b:
            raise ParseError(
                f"interval bound a <= b violated at {a}..{b}",
                opener.line,
                opener.column,
                kind="interval",
            )
        return a, b

    def or_level(self) -> MltlFormula:
        node = self.and_level()
        while self.peek().kind == "|":
            self.pos += 1
            node = Or(node, self.and_level())
        return node

    def and_level(self) -> MltlFormula:
        node = self.until_level()
        while self.peek().kind == "&":
            self.pos += 1
            node = And(node, self.until_level())
        return node

    def until_level(self) -> MltlFormula:
        node = self.unary_level()
        kind = self.peek().kind
        if kind in ("U", "R"):
            self.pos += 1
            a, b = self.interval()
            rhs = self.until_level()
            return (Until if kind == "U" else Release)(node, rhs, a, b)
        return node

    def unary_level(self) -> MltlFormula:
        tok = self.peek()
        if tok.kind == "!":
            self.pos += 1
            return Not(self.unary_level())
        if tok.kind in ("F", "G"):
            self.pos += 1
            a, b = self.interval()
            child = self.unary_level()
            return (Future if tok.kind == "F" else Global)(child, a, b)
        return self.atom()

    def atom(self) -> MltlFormula:
        tok = self.peek()
        if tok.kind == "true":
            self.pos += 1
            return TrueC()
        if tok.kind == "false":
            self.pos += 1
            return FalseC()
        if tok.kind == "prop":
            self.pos += 1
            return Prop(tok.value)
        if tok.kind == "(":
            self.pos += 1
            node = self.or_level()
            self.take(")")
            return node
        raise ParseError(
            f"expected a formula, found {tok.kind!r}", tok.line, tok.column
        )


def parse_formula(text: str) -> MltlFormula:
    """Parse the concrete syntax; raises ParseError with a position."""
    parser = _Parser(_lex(text))
    node = parser.or_level()
    parser.take("end")
    return node


# Precedence levels used by both parsing and printing.
_OR, _AND, _UNTIL, _UNARY = 1, 2, 3, 4


def _level(phi: MltlFormula) -> int:
    match phi:
        case Or():
            return _OR
        case And():
            return _AND
        case Until() | Release():
            return _UNTIL
        case Not() | Future() | Global():
            return _UNARY
        case _:
            return 5


def pretty(phi: MltlFormula) -> str:
    """Minimal-parentheses rendering; parse_formula(pretty(phi)) == phi."""

    def render(f: MltlFormula, context: int) -> str:
        match f:
            case TrueC():
                text = "true"
            case FalseC():
                text = "false"
            case Prop(k):
                text = f"p{k}"
            case Not(child):
                text = f"!{render(child, _UNARY)}"
            case Future(child, a, b):
                text = f"F[{a},{b}] {render(child, _UNARY)}"
            case Global(child, a, b):
                text = f"G[{a},{b}] {render(child, _UNARY)}"
            case And(left, right):
                text = f"{render(left, _AND)} & {render(right, _AND + 1)}"
            case Or(left, right):
                text = f"{render(left, _OR)} | {render(right, _OR + 1)}"
            case Until(left, right, a, b):
                text = (
                    f"{render(left, _UNTIL + 1)} U[{a},{b}] "
                    f"{render(right, _UNTIL)}"
                )
            case Release(left, right, a, b):
                text = (
                    f"{render(left, _UNTIL + 1)} R[{a},{b}] "
                    f"{render(right, _UNTIL)}"
                )
            case _:
                raise TypeError(f"not an MLTL formula: {f!r}")
        if _level(f) < context:
            return f"({text})"
        return text

    return render(phi, _OR)


def parse_trace(text: str, n: int) -> Trace:
    """Parse a comma-separated trace of width-n 0/1 groups.

    The empty string is the empty trace.
    """
    if text == "":
        return []
    states = []
    column = 1
    for group in text.split(","):
        for offset, ch in enumerate(group):
            if ch not in "01":
                raise ParseError(
                    f"invalid character {ch!r}", 1, column + offset,
                    kind="lexical",
                )
        if len(group) != n:
            raise ParseError(
                f"state width {len(group)} differs from {n}", 1, column
            )
        states.append({k for k, ch in enumerate(group) if ch == "1"})
        column += len(group) + 1
    return states


@dataclass(frozen=True)
class FormulaGenParams:
    """Random-generation envelope: nvars >= 1 propositions, temporal
    nesting at most depth, interval bounds at most bound."""

    nvars: int
    depth: int
    bound: int
    seed: int
    count: int
    nested_ur: bool = False

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("nvars must be at least 1")
        if min(self.depth, self.bound, self.count, self.seed) < 0:
            raise ValueError("depth, bound, seed, and count must be >= 0")


def _draw_atom(rng: random.Random, nvars: int) -> MltlFormula:
    choice = rng.randrange(nvars + 2)
    atom: MltlFormula
    if choice == 0:
        atom = TrueC()
    elif choice == 1:
        atom = FalseC()
    else:
        atom = Prop(choice - 2)
    if rng.random() < 0.5:
        return Not(atom)
    return atom


def _draw_interval(rng: random.Random, bound: int) -> tuple[int, int]:
    a = rng.randint(0, bound)
    return a, rng.randint(a, bound)


def _draw(
    rng: random.Random, nvars: int, depth: int, bound: int, nested_ur: bool
) -> MltlFormula:
    if depth == 0:
        return _draw_atom(rng, nvars)
    if nested_ur:
        a, b = _draw_interval(rng, bound)
        left = _draw(rng, nvars, depth - 1, bound, nested_ur)
        right = _draw(rng, nvars, depth - 1, bound, nested_ur)
        ctor = Until if rng.randrange(2) == 0 else Release
        return ctor(left, right, a, b)
    choice = rng.randrange(10)
    if choice == 0:
        return TrueC()
    if choice == 1:
        return FalseC()
    if choice == 2:
        return Prop(rng.randrange(nvars))
    if choice == 3:
        return Not(_draw(rng, nvars, depth - 1, bound, nested_ur))
    if choice in (4, 5):
        left = _draw(rng, nvars, depth - 1, bound, nested_ur)
        right = _draw(rng, nvars, depth - 1, bound, nested_ur)
        return (And if choice == 4 else Or)(left, right)
    a, b = _draw_interval(rng, bound)
    if choice in (6, 7):
        child = _draw(rng, nvars, depth - 1, bound, nested_ur)
        return (Future if choice == 6 else Global)(child, a, b)
    left = _draw(rng, nvars, depth - 1, bound, nested_ur)
    right = _draw(rng, nvars, depth - 1, bound, nested_ur)
    return (Until if choice == 8 else Release)(left, right, a, b)


def iter_random_formulas(params: FormulaGenParams) -> Iterator[MltlFormula]:
    """Unbounded stream of formulas; element i depends only on (seed, i).

    String seeding keeps the stream stable across processes and
    interpreter hash randomization.
    """
    index = 0
    while True:
        rng = random.Random(f"{params.seed}:{index}")
        yield _draw(rng, params.nvars, params.depth, params.bound, params.nested_ur)
        index += 1


def random_formula(params: FormulaGenParams) -> list[MltlFormula]:
    """The first `count` formulas of the seeded stream."""
    return list(islice(iter_random_formulas(params), params.count))


def temporal_depth(phi: MltlFormula) -> int:
    """Maximum nesting of temporal operators."""
    match phi:
        case TrueC() | FalseC() | Prop():
            return 0
        case Not(child):
            return temporal_depth(child)
        case And(left, right) | Or(left, right):
            return max(temporal_depth(left), temporal_depth(right))
        case Future(child, _, _) | Global(child, _, _):
            return 1 + temporal_depth(child)
        case Until(left, right, _, _) | Release(left, right, _, _):
            return 1 + max(temporal_depth(left), temporal_depth(right))
    raise TypeError(f"not an MLTL formula: {phi!r}")


def max_interval_bound(phi: MltlFormula) -> int:
    """Largest interval upper bound occurring in the formula (0 if none)."""
    match phi:
        case TrueC() | FalseC() | Prop():
            return 0
        case Not(child):
            return max_interval_bound(child)
        case And(left, right) | Or(left, right):
            return max(max_interval_bound(left), max_interval_bound(right))
        case Future(child, _, b) | Global(child, _, b):
            return max(b, max_interval_bound(child))
        case Until(left, right, _, b) | Release(left, right, _, b):
            return max(b, max_interval_bound(left), max_interval_bound(right))
    raise TypeError(f"not an MLTL formula: {phi!r}")
