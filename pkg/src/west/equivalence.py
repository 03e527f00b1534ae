"""Expansion-based regex equivalence and the exhaustive semantic oracle.

Equivalence is decided by padding both regexes to a common length,
enumerating every concrete (S-free) alternative on each side, and
comparing the two sets.  A positive verdict is sound: equal expansions
match exactly the same traces.  The oracle enumerates every trace of
the decisive lengths and compares direct satisfaction against regex
matching, giving an independent end-to-end check of the transformation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Literal

from .formula import (
    IntervalError,
    MltlFormula,
    complen,
    convert_nnf,
    find_ill_interval,
    num_vars,
    semantics,
)
from .limits import BudgetExceededError, check_deadline
from .regexes import TraceRegex, WestRegex, match
from .transform import pad_to, simp_pad_west_reg, west_reg, west_reg_aux

__all__ = [
    "EquivVerdict",
    "expand_trace_regex",
    "naive_equivalence",
    "formula_equivalence",
    "enumerate_traces",
    "brute_force_sat_traces",
    "oracle_check",
    "DEFAULT_EXPANSION_BUDGET",
    "DEFAULT_TRACE_BITS_BUDGET",
]

#: Max S-substitutions in one trace regex expansion.
DEFAULT_EXPANSION_BUDGET = 24
#: Max value of num_vars * trace length in exhaustive enumerations.
DEFAULT_TRACE_BITS_BUDGET = 20


@dataclass(frozen=True)
class EquivVerdict:
    """Outcome of an equivalence query.

    An inequivalence witness is a fully concrete trace regex matched by
    exactly one side (after padding); `detail` describes an exhausted
    budget when the outcome is "limit".
    """

    outcome: Literal["equivalent", "inequivalent", "limit"]
    witness: TraceRegex | None = None
    detail: str | None = None

    @property
    def equivalent(self) -> bool:
        return self.outcome == "equivalent"


def expand_trace_regex(
    r: TraceRegex, budget: int = DEFAULT_EXPANSION_BUDGET
) -> set[TraceRegex]:
    """All S-free trace regexes obtained by substituting 0/1 for each S."""
    wild = sum(s.count("S") for s in r)
    if wild > budget:
        raise BudgetExceededError(
            f"expansion of {wild} wildcards exceeds budget of {budget}"
        )
    out = {r}
    for t, state in enumerate(r):
        for k, bit in enumerate(state):
            if bit != "S":
                continue
            check_deadline()
            out = {
                alt[:t] + (alt[t][:k] + c + alt[t][k + 1 :],) + alt[t + 1 :]
                for alt in out
                for c in "01"
            }
    return out


def _padded_expansion(
    regex: WestRegex, m: int, n: int, budget: int
) -> set[TraceRegex]:
    padded = pad_to(regex, m, n)
    total = sum(2 ** sum(s.count("S") for s in r) for r in padded)
    if total > budget:
        raise BudgetExceededError(
            f"expansion of {total} concrete regexes exceeds budget of {budget}"
        )
    out: set[TraceRegex] = set()
    for r in padded:
        # The total check above already bounds every per-regex count.
        out |= expand_trace_regex(r, budget=budget.bit_length())
    return out


def naive_equivalence(
    left: WestRegex,
    right: WestRegex,
    n: int,
    budget: int = 1 << DEFAULT_EXPANSION_BUDGET,
) -> EquivVerdict:
    """Decide equivalence by set equality of padded expansions.

    Both sides are padded with arbitrary states to the common maximum
    alternative length first, so trailing-S differences cannot cause
    spurious mismatches.  The witness, when inequivalent, is the
    lexicographically least concrete regex in only the left side, or
    failing that the least in only the right side.
    """
    m = max((len(r) for r in [*left, *right]), default=0)
    try:
        lhs = _padded_expansion(left, m, n, budget)
        rhs = _padded_expansion(right, m, n, budget)
    except BudgetExceededError as e:
        return EquivVerdict("limit", detail=str(e))
    if lhs == rhs:
        return EquivVerdict("equivalent")
    return EquivVerdict("inequivalent", witness=min((lhs - rhs) or (rhs - lhs)))


def formula_equivalence(
    phi1: MltlFormula,
    phi2: MltlFormula,
    budget: int = 1 << DEFAULT_EXPANSION_BUDGET,
) -> EquivVerdict:
    """Compare two formulas' regexes on a common footing.

    Both are built over the larger of the two variable counts and padded
    to the larger of the two computation lengths, so formulas over
    different alphabets or horizons are still comparable.
    """
    for phi in (phi1, phi2):
        offender = find_ill_interval(phi)
        if offender is not None:
            raise IntervalError(offender.a, offender.b, offender)
    n = max(num_vars(phi1), num_vars(phi2))
    m = max(complen(phi1), complen(phi2))
    lhs = pad_to(west_reg_aux(convert_nnf(phi1), n), m, n)
    rhs = pad_to(west_reg_aux(convert_nnf(phi2), n), m, n)
    return naive_equivalence(lhs, rhs, n, budget)


def enumerate_traces(n: int, m: int) -> Iterable[tuple[frozenset[int], ...]]:
    """Every trace of length m over propositions 0..n-1, in a fixed order."""
    states = [
        frozenset(k for k in range(n) if bits & (1 << k))
        for bits in range(2**n)
    ]
    return product(states, repeat=m)


def brute_force_sat_traces(
    phi: MltlFormula, m: int, budget: int = DEFAULT_TRACE_BITS_BUDGET
) -> set[tuple[frozenset[int], ...]]:
    """All length-m traces over num_vars(phi) propositions satisfying phi."""
    offender = find_ill_interval(phi)
    if offender is not None:
        raise IntervalError(offender.a, offender.b, offender)
    n = num_vars(phi)
    if n * m > budget:
        raise BudgetExceededError(
            f"enumerating 2^{n * m} traces exceeds budget of 2^{budget}"
        )
    return {pi for pi in enumerate_traces(n, m) if semantics(pi, phi)}


def oracle_check(
    phi: MltlFormula, budget: int = DEFAULT_TRACE_BITS_BUDGET
) -> bool:
    """Exhaustively certify the transformation of one formula.

    For every trace of length complen(phi) and complen(phi) + 1, direct
    satisfaction, matching against west_reg, and matching against
    simp_pad_west_reg must all agree.
    """
    offender = find_ill_interval(phi)
    if offender is not None:
        raise IntervalError(offender.a, offender.b, offender)
    n = num_vars(phi)
    m0 = complen(phi)
    if n * (m0 + 1) > budget:
        raise BudgetExceededError(
            f"enumerating 2^{n * (m0 + 1)} traces exceeds budget of 2^{budget}"
        )
    plain = west_reg(phi)
    padded = simp_pad_west_reg(phi)
    for m in (m0, m0 + 1):
        for pi in enumerate_traces(n, m):
            check_deadline()
            expected = semantics(pi, phi)
            if match(pi, plain) != expected or match(pi, padded) != expected:
                return False
    return True
