"""Core regex operators: conjunction, disjunction, shifting, simplification.

Conjunction is built in four levels (bit, state, trace, alternation);
trace-level conjunction pads the shorter operand with arbitrary all-S
states.  The simplifier greedily fuses pairs of alternatives that are
identical or differ at exactly one coordinate, always producing a
match-set-equal regex with fewer alternatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .limits import check_deadline
from .regexes import StateRegex, TraceRegex, WestBit, WestRegex

__all__ = [
    "and_bitwise",
    "and_state",
    "and_trace",
    "and_regex",
    "or_regex",
    "arbitrary_trace",
    "shift",
    "MergeCandidate",
    "find_merge_candidate",
    "west_simp",
    "and_simp",
    "or_simp",
]


def and_bitwise(b1: WestBit, b2: WestBit) -> WestBit | None:
    """Intersection of two bits; None when it is empty (0 against 1)."""
    if b1 == "S":
        return b2
    if b2 == "S" or b1 == b2:
        return b1
    return None


def and_state(s1: StateRegex, s2: StateRegex) -> StateRegex | None:
    """Pointwise bit conjunction; None on width mismatch or contradiction."""
    if len(s1) != len(s2):
        return None
    out = []
    for b1, b2 in zip(s1, s2):
        b = and_bitwise(b1, b2)
        if b is None:
            return None
        out.append(b)
    return "".join(out)


def and_trace(
    r1: TraceRegex, r2: TraceRegex, n: int
) -> TraceRegex | None:
    """Timestep-wise conjunction, padding the shorter input with all-S states."""
    if len(r1) < len(r2):
        r1, r2 = r2, r1
    out = []
    for t, s1 in enumerate(r1):
        s = and_state(s1, r2[t]) if t < len(r2) else s1
        if s is None:
            return None
        out.append(s)
    return tuple(out)


def and_regex(left: WestRegex, right: WestRegex, n: int) -> WestRegex:
    """All satisfiable pairwise trace conjunctions, left-major order."""
    out: WestRegex = []
    for r1 in left:
        check_deadline()
        for r2 in right:
            r = and_trace(r1, r2, n)
            if r is not None:
                out.append(r)
    return out


def or_regex(left: WestRegex, right: WestRegex) -> WestRegex:
    """Alternation union: plain concatenation, left alternatives first."""
    return list(left) + list(right)


def arbitrary_trace(n: int, t: int) -> TraceRegex:
    """t all-S states of width n; matches every trace of length >= t."""
    return ("S" * n,) * t


def shift(regex: WestRegex, n: int, t: int) -> WestRegex:
    """Prefix every alternative with t arbitrary states, delaying it t steps."""
    prefix = arbitrary_trace(n, t)
    return [prefix + r for r in regex]


@dataclass(frozen=True)
class MergeCandidate:
    """A fusable pair of alternatives: indices i < j, and the single
    (timestep, variable) coordinate where they differ, or None when they
    are identical."""

    i: int
    j: int
    pos: tuple[int, int] | None


def find_merge_candidate(alts: Sequence[TraceRegex]) -> MergeCandidate | None:
    """Locate the first fusable pair, scanning in lowest-(i, j) order.

    Two alternatives are fusable iff they have equal length and differ
    at no coordinate (duplicates) or exactly one.  Candidate pairs are
    found by hashing each alternative once per masked coordinate, which
    finds the same pair as the quadratic scan would.
    """
    partner: dict[int, int] = {}
    buckets: dict[object, int] = {}

    def offer(key: object, idx: int) -> None:
        prev = buckets.get(key)
        if prev is None:
            buckets[key] = idx
        else:
            # prev < idx by scan order; keep the smallest j per i.
            j = partner.get(prev)
            if j is None or idx < j:
                partner[prev] = idx

    for idx, alt in enumerate(alts):
        offer(alt, idx)
        for t, state in enumerate(alt):
            for k in range(len(state)):
                masked = state[:k] + "*" + state[k + 1 :]
                offer((t, k, alt[:t], masked, alt[t + 1 :]), idx)

    if not partner:
        return None
    i = min(partner)
    j = partner[i]
    diff = [
        (t, k)
        for t, (s1, s2) in enumerate(zip(alts[i], alts[j]))
        for k, (b1, b2) in enumerate(zip(s1, s2))
        if b1 != b2
    ]
    assert len(diff) <= 1
    return MergeCandidate(i, j, diff[0] if diff else None)


def _merge(r1: TraceRegex, pos: tuple[int, int] | None) -> TraceRegex:
    if pos is None:
        return r1
    t, k = pos
    state = r1[t]
    return r1[:t] + (state[:k] + "S" + state[k + 1 :],) + r1[t + 1 :]


def west_simp(regex: WestRegex, n: int) -> WestRegex:
    """Greedy simplification: fuse pairs until no candidate remains.

    Matches exactly the same traces as the input; the alternative count
    strictly decreases on every step, so the loop terminates.  The fused
    bit is S whichever two distinct bits differ, since each case is a
    set union.
    """
    alts = list(regex)
    while True:
        check_deadline()
        cand = find_merge_candidate(alts)
        if cand is None:
            return alts
        before = len(alts)
        alts[cand.i] = _merge(alts[cand.i], cand.pos)
        del alts[cand.j]
        assert len(alts) < before


def and_simp(left: WestRegex, right: WestRegex, n: int) -> WestRegex:
    """Conjunction followed by simplification."""
    return west_simp(and_regex(left, right, n), n)


def or_simp(left: WestRegex, right: WestRegex, n: int) -> WestRegex:
    """Disjunction followed by simplification."""
    return west_simp(or_regex(left, right), n)
