"""Mission-time LTL abstract syntax and finite-trace semantics.

Formulas are immutable trees over natural-number proposition indices.
Every temporal operator carries a closed interval [a, b] of timesteps;
a formula is interval well-defined when a <= b holds at every temporal
node.  Traces are finite sequences of states, each state the set of
proposition indices true at that timestep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Sequence

__all__ = [
    "MltlFormula",
    "TrueC",
    "FalseC",
    "Prop",
    "Not",
    "And",
    "Or",
    "Future",
    "Global",
    "Until",
    "Release",
    "Trace",
    "IntervalError",
    "drop",
    "intervals_welldef",
    "find_ill_interval",
    "num_vars",
    "is_nnf",
    "convert_nnf",
    "complen",
    "ast_size",
    "semantics",
]


class MltlFormula:
    """Base class for all formula nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class TrueC(MltlFormula):
    pass


@dataclass(frozen=True)
class FalseC(MltlFormula):
    pass


@dataclass(frozen=True)
class Prop(MltlFormula):
    k: int


@dataclass(frozen=True)
class Not(MltlFormula):
    child: MltlFormula


@dataclass(frozen=True)
class And(MltlFormula):
    left: MltlFormula
    right: MltlFormula


@dataclass(frozen=True)
class Or(MltlFormula):
    left: MltlFormula
    right: MltlFormula


@dataclass(frozen=True)
class Future(MltlFormula):
    child: MltlFormula
    a: int
    b: int


@dataclass(frozen=True)
class Global(MltlFormula):
    child: MltlFormula
    a: int
    b: int


@dataclass(frozen=True)
class Until(MltlFormula):
    left: MltlFormula
    right: MltlFormula
    a: int
    b: int


@dataclass(frozen=True)
class Release(MltlFormula):
    left: MltlFormula
    right: MltlFormula
    a: int
    b: int


#: A trace state is the set of proposition indices true at that timestep.
Trace = Sequence[AbstractSet[int]]


class IntervalError(ValueError):
    """Raised when an operation requires interval well-definedness."""

    def __init__(self, a: int, b: int, offender: MltlFormula | None = None):
        self.a = a
        self.b = b
        self.offender = offender
        message = f"interval bound a <= b violated at {a}..{b}"
        if offender is not None:
            message += f" in {offender!r}"
        super().__init__(message)


def drop(trace: Trace, t: int) -> Trace:
    """Suffix of a trace starting at timestep t; drop(pi, 0) is pi."""
    return trace[t:]


def find_ill_interval(phi: MltlFormula) -> MltlFormula | None:
    """First temporal subformula (pre-order) with a > b, or None."""
    match phi:
        case TrueC() | FalseC() | Prop():
            return None
        case Not(child):
            return find_ill_interval(child)
        case And(left, right) | Or(left, right):
            return find_ill_interval(left) or find_ill_interval(right)
        case Future(child, a, b) | Global(child, a, b):
            if a > b:
                return phi
            return find_ill_interval(child)
        case Until(left, right, a, b) | Release(left, right, a, b):
            if a > b:
                return phi
            return find_ill_interval(left) or find_ill_interval(right)
    raise TypeError(f"not an MLTL formula: {phi!r}")


def intervals_welldef(phi: MltlFormula) -> bool:
    """True iff every temporal subformula satisfies a <= b."""
    return find_ill_interval(phi) is None


def num_vars(phi: MltlFormula) -> int:
    """Number of atomic propositions: Prop(p) counts as p + 1.

    TrueC and FalseC contain no proposition and count as 0, so width-0
    state regexes are legal downstream.
    """
    match phi:
        case TrueC() | FalseC():
            return 0
        case Prop(k):
            return k + 1
        case Not(child) | Future(child, _, _) | Global(child, _, _):
            return num_vars(child)
        case (
            And(left, right)
            | Or(left, right)
            | Until(left, right, _, _)
            | Release(left, right, _, _)
        ):
            return max(num_vars(left), num_vars(right))
    raise TypeError(f"not an MLTL formula: {phi!r}")


def is_nnf(phi: MltlFormula) -> bool:
    """True iff negation is applied only to atomic propositions."""
    match phi:
        case TrueC() | FalseC() | Prop():
            return True
        case Not(child):
            return isinstance(child, Prop)
        case And(left, right) | Or(left, right):
            return is_nnf(left) and is_nnf(right)
        case Future(child, _, _) | Global(child, _, _):
            return is_nnf(child)
        case Until(left, right, _, _) | Release(left, right, _, _):
            return is_nnf(left) and is_nnf(right)
    raise TypeError(f"not an MLTL formula: {phi!r}")


def convert_nnf(phi: MltlFormula) -> MltlFormula:
    """Push negations down to propositions via the standard dualities.

    Semantics-preserving on every trace and idempotent.  The rewrite
    swaps Future with Global and Until with Release under negation, so
    complen is unchanged.
    """
    match phi:
        case TrueC() | FalseC() | Prop():
            return phi
        case And(left, right):
            return And(convert_nnf(left), convert_nnf(right))
        case Or(left, right):
            return Or(convert_nnf(left), convert_nnf(right))
        case Future(child, a, b):
            return Future(convert_nnf(child), a, b)
        case Global(child, a, b):
            return Global(convert_nnf(child), a, b)
        case Until(left, right, a, b):
            return Until(convert_nnf(left), convert_nnf(right), a, b)
        case Release(left, right, a, b):
            return Release(convert_nnf(left), convert_nnf(right), a, b)
        case Not(child):
            match child:
                case TrueC():
                    return FalseC()
                case FalseC():
                    return TrueC()
                case Prop():
                    return phi
                case Not(inner):
                    return convert_nnf(inner)
                case And(left, right):
                    return Or(convert_nnf(Not(left)), convert_nnf(Not(right)))
                case Or(left, right):
                    return And(convert_nnf(Not(left)), convert_nnf(Not(right)))
                case Future(inner, a, b):
                    return Global(convert_nnf(Not(inner)), a, b)
                case Global(inner, a, b):
                    return Future(convert_nnf(Not(inner)), a, b)
                case Until(left, right, a, b):
                    return Release(
                        convert_nnf(Not(left)), convert_nnf(Not(right)), a, b
                    )
                case Release(left, right, a, b):
                    return Until(
                        convert_nnf(Not(left)), convert_nnf(Not(right)), a, b
                    )
    raise TypeError(f"not an MLTL formula: {phi!r}")


def complen(phi: MltlFormula) -> int:
    """Computation length: the trace length sufficient to decide phi.

    Atoms need 1 timestep; negation is transparent; binary connectives
    take the max of their children; a temporal operator adds its upper
    bound b on top of what its argument(s) need.
    """
    match phi:
        case TrueC() | FalseC() | Prop():
            return 1
        case Not(child):
            return complen(child)
        case And(left, right) | Or(left, right):
            return max(complen(left), complen(right))
        case Future(child, _, b) | Global(child, _, b):
            return b + complen(child)
        case Until(left, right, _, b) | Release(left, right, _, b):
            return b + max(complen(left), complen(right))
    raise TypeError(f"not an MLTL formula: {phi!r}")


def ast_size(phi: MltlFormula) -> int:
    """Number of nodes in the formula tree."""
    match phi:
        case TrueC() | FalseC() | Prop():
            return 1
        case Not(child) | Future(child, _, _) | Global(child, _, _):
            return 1 + ast_size(child)
        case (
            And(left, right)
            | Or(left, right)
            | Until(left, right, _, _)
            | Release(left, right, _, _)
        ):
            return 1 + ast_size(left) + ast_size(right)
    raise TypeError(f"not an MLTL formula: {phi!r}")


def semantics(trace: Trace, phi: MltlFormula) -> bool:
    """Finite-trace satisfaction.

    A proposition requires a nonempty trace.  Global and Release hold
    vacuously when the trace has at most `a` states; Future and Until
    then fail.  Suffixes past the end of the trace are empty, and the
    ranges [a, i-1] and [a, b-1] are empty when the natural-number
    subtraction bottoms out.
    """
    offender = find_ill_interval(phi)
    if offender is not None:
        raise IntervalError(offender.a, offender.b, offender)
    states = tuple(trace)
    m = len(states)

    def sat(t: int, f: MltlFormula) -> bool:
        # t is the suffix start; the suffix is empty when t >= m.
        match f:
            case TrueC():
                return True
            case FalseC():
                return False
            case Prop(k):
                return t < m and k in states[t]
            case Not(child):
                return not sat(t, child)
            case And(left, right):
                return sat(t, left) and sat(t, right)
            case Or(left, right):
                return sat(t, left) or sat(t, right)
            case Future(child, a, b):
                return m - t > a and any(
                    sat(t + i, child) for i in range(a, b + 1)
                )
            case Global(child, a, b):
                return m - t <= a or all(
                    sat(t + i, child) for i in range(a, b + 1)
                )
            case Until(left, right, a, b):
                return m - t > a and any(
                    sat(t + i, right)
                    and all(sat(t + j, left) for j in range(a, i))
                    for i in range(a, b + 1)
                )
            case Release(left, right, a, b):
                if m - t <= a:
                    return True
                if all(sat(t + i, right) for i in range(a, b + 1)):
                    return True
                return any(
                    sat(t + j, left)
                    and all(sat(t + k, right) for k in range(a, j + 1))
                    for j in range(a, b)
                )
        raise TypeError(f"not an MLTL formula: {f!r}")

    return sat(0, phi)
