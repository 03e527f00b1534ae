"""Structural translation of formulas into trace regexes.

Each temporal operator becomes a finite combination of shifted copies
of its argument regexes, conjoined or alternated (with simplification
at every combining step).  The top-level entry normalizes to NNF first,
then recurses; for any trace at least as long as the formula's
computation length, matching the result coincides with satisfaction.
"""

from __future__ import annotations

from .formula import (
    And,
    FalseC,
    Future,
    Global,
    IntervalError,
    MltlFormula,
    Not,
    Or,
    Prop,
    Release,
    TrueC,
    Until,
    ast_size,
    complen,
    convert_nnf,
    find_ill_interval,
    is_nnf,
    num_vars,
)
from .limits import check_deadline
from .ops import and_simp, arbitrary_trace, or_simp, shift, west_simp
from .regexes import WestRegex

__all__ = [
    "west_global",
    "west_future",
    "west_until",
    "west_release",
    "west_reg_aux",
    "west_reg",
    "pad_to",
    "simp_pad_west_reg",
]

#: The empty conjunction: one alternative with no constraints.
MATCH_ALL: WestRegex = [()]


def _require_interval(a: int, b: int) -> None:
    if a > b:
        raise IntervalError(a, b)


def west_global(regex: WestRegex, a: int, b: int, n: int) -> WestRegex:
    """Require the regex's behavior at every timestep in [a, b].

    Built right-to-left: the i = a shift is the base and each higher
    shift is conjoined on the left.
    """
    _require_interval(a, b)
    acc = shift(regex, n, a)
    for i in range(a + 1, b + 1):
        acc = and_simp(shift(regex, n, i), acc, n)
    return acc


def west_future(regex: WestRegex, a: int, b: int, n: int) -> WestRegex:
    """Require the regex's behavior at some timestep in [a, b]."""
    _require_interval(a, b)
    acc = shift(regex, n, a)
    for i in range(a + 1, b + 1):
        acc = or_simp(shift(regex, n, i), acc, n)
    return acc


def west_until(
    lhs: WestRegex, rhs: WestRegex, a: int, b: int, n: int
) -> WestRegex:
    """rhs holds at some i in [a, b], with lhs at every j in [a, i-1].

    The i = a disjunct has an empty lhs-conjunction, which is the
    match-everything regex.
    """
    _require_interval(a, b)
    prefix = MATCH_ALL
    acc = and_simp(prefix, shift(rhs, n, a), n)
    for i in range(a + 1, b + 1):
        prefix = and_simp(prefix, shift(lhs, n, i - 1), n)
        acc = or_simp(acc, and_simp(prefix, shift(rhs, n, i), n), n)
    return acc


def west_release(
    lhs: WestRegex, rhs: WestRegex, a: int, b: int, n: int
) -> WestRegex:
    """rhs holds throughout [a, b], or lhs releases it at some j in [a, b-1]
    with rhs holding up to and including j."""
    _require_interval(a, b)
    acc = west_global(rhs, a, b, n)
    prefix = MATCH_ALL
    for j in range(a, b):
        prefix = and_simp(prefix, shift(rhs, n, j), n)
        acc = or_simp(acc, and_simp(shift(lhs, n, j), prefix, n), n)
    return acc


def west_reg_aux(phi: MltlFormula, n: int) -> WestRegex:
    """Regex of an NNF formula over n >= num_vars(phi) propositions.

    Every alternative in the result has width-n states.
    """
    if not is_nnf(phi):
        raise ValueError(f"formula is not in negation normal form: {phi!r}")
    if num_vars(phi) > n:
        raise ValueError(
            f"formula mentions proposition {num_vars(phi) - 1}, "
            f"beyond the {n} available"
        )
    check_deadline()
    match phi:
        case TrueC():
            return [("S" * n,)]
        case FalseC():
            return []
        case Prop(k):
            return [("S" * k + "1" + "S" * (n - k - 1),)]
        case Not(Prop(k)):
            return [("S" * k + "0" + "S" * (n - k - 1),)]
        case And(left, right):
            assert ast_size(left) < ast_size(phi) > ast_size(right)
            return and_simp(west_reg_aux(left, n), west_reg_aux(right, n), n)
        case Or(left, right):
            assert ast_size(left) < ast_size(phi) > ast_size(right)
            return or_simp(west_reg_aux(left, n), west_reg_aux(right, n), n)
        case Future(child, a, b):
            assert ast_size(child) < ast_size(phi)
            return west_future(west_reg_aux(child, n), a, b, n)
        case Global(child, a, b):
            assert ast_size(child) < ast_size(phi)
            return west_global(west_reg_aux(child, n), a, b, n)
        case Until(left, right, a, b):
            assert ast_size(left) < ast_size(phi) > ast_size(right)
            return west_until(
                west_reg_aux(left, n), west_reg_aux(right, n), a, b, n
            )
        case Release(left, right, a, b):
            assert ast_size(left) < ast_size(phi) > ast_size(right)
            return west_release(
                west_reg_aux(left, n), west_reg_aux(right, n), a, b, n
            )
    raise TypeError(f"not an MLTL formula: {phi!r}")


def west_reg(phi: MltlFormula) -> WestRegex:
    """Regex matching, among traces of length >= complen(phi), exactly
    the traces that satisfy phi."""
    offender = find_ill_interval(phi)
    if offender is not None:
        raise IntervalError(offender.a, offender.b, offender)
    return west_reg_aux(convert_nnf(phi), num_vars(phi))


def pad_to(regex: WestRegex, m: int, n: int) -> WestRegex:
    """Extend every alternative with arbitrary states to length exactly m.

    On traces of length >= m the match set is unchanged.
    """
    for r in regex:
        if len(r) > m:
            raise ValueError(
                f"alternative of length {len(r)} exceeds pad target {m}"
            )
    return [r + arbitrary_trace(n, m - len(r)) for r in regex]


def simp_pad_west_reg(phi: MltlFormula) -> WestRegex:
    """west_reg with every alternative padded to complen(phi), then
    simplified; removes trailing-S length differences between otherwise
    equivalent outputs."""
    n = num_vars(phi)
    return west_simp(pad_to(west_reg(phi), complen(phi), n), n)
