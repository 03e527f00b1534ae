"""The four-level trace-regex tower and its matching predicates.

A bit is one of '0', '1', 'S' where 'S' abbreviates 0|1.  A state regex
is a width-n string of bits constraining one timestep; a trace regex is
a tuple of state regexes; a full regex is a list of trace regexes read
as an alternation.  A trace regex matches any trace at least as long as
itself whose prefix satisfies every state constraint, and an alternation
matches a trace iff some alternative does.
"""

from __future__ import annotations

from typing import AbstractSet, Iterable, Literal, Sequence

from .formula import Trace

__all__ = [
    "WestBit",
    "ZERO",
    "ONE",
    "S",
    "StateRegex",
    "TraceRegex",
    "WestRegex",
    "RegexTextError",
    "trace_regex_of_vars",
    "west_regex_of_vars",
    "match_timestep",
    "match_regex",
    "match",
    "trace_to_bits",
    "regex_to_text",
    "text_to_regex",
]

WestBit = Literal["0", "1", "S"]
ZERO: WestBit = "0"
ONE: WestBit = "1"
S: WestBit = "S"

#: Width-n string over '0', '1', 'S'; the empty string is the legal
#: width-0 degenerate case.
StateRegex = str
TraceRegex = tuple[StateRegex, ...]
WestRegex = list[TraceRegex]


class RegexTextError(ValueError):
    """Malformed textual regex; carries a 1-based (line, column)."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{message} at line {line}, column {column}")


def trace_regex_of_vars(r: Sequence[StateRegex], n: int) -> bool:
    """True iff every state regex in r has width n."""
    return all(len(s) == n for s in r)


def west_regex_of_vars(regex: Iterable[Sequence[StateRegex]], n: int) -> bool:
    """True iff every alternative is well-formed for n variables."""
    return all(trace_regex_of_vars(r, n) for r in regex)


def match_timestep(state: AbstractSet[int], s: StateRegex) -> bool:
    """Does one trace state satisfy one state regex?

    A '1' at position i demands i in state, a '0' demands i not in
    state, and 'S' constrains nothing.
    """
    for i, bit in enumerate(s):
        if bit == "1":
            if i not in state:
                return False
        elif bit == "0":
            if i in state:
                return False
    return True


def match_regex(trace: Trace, r: Sequence[StateRegex]) -> bool:
    """Does a trace match a trace regex?

    The trace must be at least as long as the regex; states beyond the
    regex length are unconstrained.
    """
    if len(trace) < len(r):
        return False
    return all(match_timestep(trace[t], s) for t, s in enumerate(r))


def match(trace: Trace, regex: Iterable[Sequence[StateRegex]]) -> bool:
    """Does some alternative of the regex match the trace?"""
    return any(match_regex(trace, r) for r in regex)


def trace_to_bits(trace: Trace, n: int) -> TraceRegex:
    """Encode a trace as its width-n bit string (no 'S' appears).

    Rejects traces mentioning a proposition index >= n.
    """
    out = []
    for t, state in enumerate(trace):
        bad = [k for k in state if k >= n]
        if bad:
            raise ValueError(
                f"proposition index {min(bad)} at timestep {t} "
                f"out of range for {n} variables"
            )
        out.append("".join("1" if k in state else "0" for k in range(n)))
    return tuple(out)


def regex_to_text(regex: Iterable[Sequence[StateRegex]]) -> str:
    """Serialize: commas between timesteps, newlines between alternatives.

    The format cannot distinguish the match-nothing regex from width-0
    or length-0 alternatives (all serialize to the empty string); the
    parse side resolves the empty string as match-nothing.
    """
    return "\n".join(",".join(r) for r in regex)


def text_to_regex(text: str) -> WestRegex:
    """Parse the textual regex format; inverse of regex_to_text for n >= 1.

    An empty file is the match-nothing regex.  A single trailing newline
    is tolerated.  Errors carry a 1-based line and column.
    """
    if text.endswith("\n"):
        text = text[:-1]
    if text == "":
        return []
    regex: WestRegex = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line == "":
            raise RegexTextError("empty alternative", lineno, 1)
        states = []
        width: int | None = None
        column = 1
        for part in line.split(","):
            for offset, ch in enumerate(part):
                if ch not in "01S":
                    raise RegexTextError(
                        f"invalid character {ch!r}", lineno, column + offset
                    )
            if width is None:
                width = len(part)
            elif len(part) != width:
                raise RegexTextError(
                    f"state width {len(part)} differs from {width}",
                    lineno,
                    column,
                )
            states.append(part)
            column += len(part) + 1
        regex.append(tuple(states))
    return regex
