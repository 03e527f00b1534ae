"""Shared oracle helpers and hypothesis strategies.

The oracles here are deliberately direct: match sets and satisfaction
sets are computed by enumerating every trace of the relevant lengths
and asking the definitional predicates, never by reusing the machinery
under test.
"""

from __future__ import annotations

import random

import hypothesis.strategies as st

from west import (
    And,
    FalseC,
    Future,
    Global,
    Not,
    Or,
    Prop,
    Release,
    TrueC,
    Until,
    enumerate_traces,
    match,
    match_regex,
    semantics,
)

TraceTuple = tuple[frozenset[int], ...]


def traces_up_to(n: int, max_len: int) -> list[TraceTuple]:
    """Every trace over n propositions of length 0..max_len."""
    out: list[TraceTuple] = []
    for m in range(max_len + 1):
        out.extend(enumerate_traces(n, m))
    return out


def match_set(regex, n: int, max_len: int) -> set[TraceTuple]:
    """Traces of length 0..max_len matched by the regex."""
    return {pi for pi in traces_up_to(n, max_len) if match(pi, regex)}


def regex_match_set(r, n: int, max_len: int) -> set[TraceTuple]:
    """Traces of length 0..max_len matched by one trace regex."""
    return {pi for pi in traces_up_to(n, max_len) if match_regex(pi, r)}


def sat_set(phi, n: int, max_len: int) -> set[TraceTuple]:
    """Traces of length 0..max_len satisfying the formula."""
    return {pi for pi in traces_up_to(n, max_len) if semantics(pi, phi)}


# -- hypothesis strategies ---------------------------------------------------

def state_regexes(n: int):
    return st.text(alphabet="01S", min_size=n, max_size=n)


def trace_regexes(n: int, max_len: int = 3):
    return st.lists(state_regexes(n), max_size=max_len).map(tuple)


def west_regexes(n: int, max_len: int = 3, max_alts: int = 3):
    return st.lists(trace_regexes(n, max_len), max_size=max_alts)


def sized_west_regexes(max_n: int = 3, max_len: int = 3, max_alts: int = 3):
    """Pairs (n, regex) with every alternative of width n."""
    return st.integers(0, max_n).flatmap(
        lambda n: st.tuples(st.just(n), west_regexes(n, max_len, max_alts))
    )


def formulas(max_vars: int = 3, max_depth: int = 2, max_bound: int = 2):
    atoms = st.one_of(
        st.just(TrueC()),
        st.just(FalseC()),
        st.integers(0, max_vars - 1).map(Prop),
    )
    intervals = st.tuples(st.integers(0, max_bound), st.integers(0, max_bound)).map(
        lambda ab: (min(ab), max(ab))
    )

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.tuples(children, children).map(lambda t: And(*t)),
            st.tuples(children, children).map(lambda t: Or(*t)),
            st.tuples(children, intervals).map(lambda t: Future(t[0], *t[1])),
            st.tuples(children, intervals).map(lambda t: Global(t[0], *t[1])),
            st.tuples(children, children, intervals).map(
                lambda t: Until(t[0], t[1], *t[2])
            ),
            st.tuples(children, children, intervals).map(
                lambda t: Release(t[0], t[1], *t[2])
            ),
        )

    return st.recursive(atoms, extend, max_leaves=2**max_depth)


# -- plain-random generators for the bulk acceptance sweeps ------------------

def random_state_regex(rng: random.Random, n: int) -> str:
    return "".join(rng.choice("01S") for _ in range(n))


def random_trace_regex(rng: random.Random, n: int, max_len: int):
    return tuple(
        random_state_regex(rng, n) for _ in range(rng.randint(0, max_len))
    )


def random_west_regex(rng: random.Random, n: int, max_len: int, max_alts: int):
    return [
        random_trace_regex(rng, n, max_len)
        for _ in range(rng.randint(0, max_alts))
    ]
