import pytest
from hypothesis import given, settings

from conftest import formulas, match_set, sat_set, traces_up_to
from west import (
    And,
    FalseC,
    Future,
    Global,
    IntervalError,
    Not,
    Or,
    Prop,
    Release,
    TrueC,
    Until,
    complen,
    convert_nnf,
    match,
    num_vars,
    pad_to,
    semantics,
    simp_pad_west_reg,
    west_future,
    west_global,
    west_reg,
    west_reg_aux,
    west_regex_of_vars,
    west_release,
    west_until,
)


class TestWestGlobal:
    def test_concrete_output(self):
        assert west_global([("1",)], 0, 1, 1) == [("1", "1")]

    def test_match_set_is_satisfaction(self):
        regex = west_global([("1",)], 0, 1, 1)
        expected = {
            pi
            for pi in traces_up_to(1, 3)
            if len(pi) >= 2 and 0 in pi[0] and 0 in pi[1]
        }
        assert match_set(regex, 1, 3) == expected
        # Beyond vacuous short traces this is exactly satisfaction.
        sat = sat_set(Global(Prop(0), 0, 1), 1, 3)
        assert {pi for pi in sat if len(pi) >= 2} == expected

    def test_point_interval_is_shift(self):
        from west import shift

        regex = [("1", "0")]
        got = west_global(regex, 2, 2, 1)
        assert match_set(got, 1, 5) == match_set(shift(regex, 1, 2), 1, 5)

    def test_empty_alternation(self):
        assert west_global([], 0, 2, 1) == []


class TestWestFuture:
    def test_match_set(self):
        regex = west_future([("1",)], 0, 1, 1)
        expected = {
            pi
            for pi in traces_up_to(1, 3)
            if len(pi) >= 1 and (0 in pi[0] or (len(pi) >= 2 and 0 in pi[1]))
        }
        assert match_set(regex, 1, 3) == expected

    def test_point_interval_is_shift(self):
        from west import shift

        regex = [("1",), ("0", "0")]
        got = west_future(regex, 1, 1, 1)
        assert match_set(got, 1, 4) == match_set(shift(regex, 1, 1), 1, 4)

    def test_empty_alternation(self):
        assert west_future([], 0, 2, 1) == []


class TestWestUntil:
    def test_point_interval_is_rhs_shift(self):
        from west import shift

        lhs, rhs = [("1S",)], [("S1",)]
        got = west_until(lhs, rhs, 2, 2, 2)
        assert match_set(got, 2, 4) == match_set(shift(rhs, 2, 2), 2, 4)

    def test_oracle_equivalence(self):
        phi = Until(Prop(0), Prop(1), 0, 1)
        regex = west_until([("1S",)], [("S1",)], 0, 1, 2)
        for m in (2, 3):
            for pi in traces_up_to(2, m):
                if len(pi) == m:
                    assert match(pi, regex) == semantics(pi, phi)

    def test_unsatisfiable_rhs(self):
        assert west_until([("1S",)], [], 0, 3, 2) == []


class TestWestRelease:
    def test_point_interval_is_global(self):
        lhs, rhs = [("1S",)], [("S1",)]
        got = west_release(lhs, rhs, 1, 1, 2)
        assert match_set(got, 2, 3) == match_set(west_global(rhs, 1, 1, 2), 2, 3)

    def test_oracle_equivalence(self):
        phi = Release(Prop(0), Prop(1), 0, 2)
        regex = west_release([("1S",)], [("S1",)], 0, 2, 2)
        for m in (3, 4):
            for pi in traces_up_to(2, m):
                if len(pi) == m:
                    assert match(pi, regex) == semantics(pi, phi)

    def test_unsatisfiable_lhs_leaves_global(self):
        rhs = [("S1",)]
        got = west_release([], rhs, 0, 2, 2)
        assert match_set(got, 2, 4) == match_set(west_global(rhs, 0, 2, 2), 2, 4)


class TestWestRegAux:
    def test_true_is_one_arbitrary_state(self):
        assert west_reg_aux(TrueC(), 3) == [("SSS",)]

    def test_false_is_empty(self):
        assert west_reg_aux(FalseC(), 3) == []

    def test_prop_pins_one_bit(self):
        assert west_reg_aux(Prop(1), 3) == [("S1S",)]

    def test_negated_prop(self):
        assert west_reg_aux(Not(Prop(1)), 3) == [("S0S",)]

    def test_and_of_props(self):
        assert west_reg_aux(And(Prop(0), Prop(1)), 2) == [("11",)]

    def test_rejects_non_nnf(self):
        with pytest.raises(ValueError, match="negation normal form"):
            west_reg_aux(Not(And(Prop(0), Prop(1))), 2)

    def test_rejects_too_few_vars(self):
        with pytest.raises(ValueError, match="beyond"):
            west_reg_aux(Prop(3), 2)


class TestWestReg:
    def test_negated_conjunction_match_set(self):
        regex = west_reg(Not(And(Prop(0), Prop(1))))
        expected = match_set([("0S",)], 2, 2) | match_set([("S0",)], 2, 2)
        assert match_set(regex, 2, 2) == expected

    def test_global_example(self):
        assert west_reg(Global(Prop(0), 0, 1)) == [("1", "1")]

    def test_false(self):
        assert west_reg(FalseC()) == []

    def test_rejects_bad_intervals_naming_offender(self):
        with pytest.raises(IntervalError, match=r"3\.\.2"):
            west_reg(And(Prop(0), Future(Prop(1), 3, 2)))


class TestPadTo:
    def test_appends_arbitrary_state(self):
        assert pad_to([("1",)], 2, 1) == [("1", "S")]

    def test_noop_at_target(self):
        regex = [("1", "0")]
        assert pad_to(regex, 2, 1) == regex

    def test_empty(self):
        assert pad_to([], 4, 2) == []

    def test_rejects_overlong(self):
        with pytest.raises(ValueError, match="exceeds"):
            pad_to([("1", "1", "1")], 2, 1)

    def test_match_set_unchanged_at_or_beyond_target(self):
        regex = [("1",), ("0", "0")]
        padded = pad_to(regex, 2, 1)
        for pi in traces_up_to(1, 4):
            if len(pi) >= 2:
                assert match(pi, padded) == match(pi, regex)


class TestSimpPadWestReg:
    def test_future_alternatives_have_computation_length(self):
        phi = Future(Prop(0), 0, 1)
        regex = simp_pad_west_reg(phi)
        assert all(len(r) == complen(phi) == 2 for r in regex)
        expected = {
            pi
            for pi in traces_up_to(1, 3)
            if len(pi) >= 2 and (0 in pi[0] or 0 in pi[1])
        }
        assert match_set(regex, 1, 3) == expected

    def test_atom_already_padded(self):
        assert simp_pad_west_reg(Prop(0)) == [("1",)]

    def test_width_zero_degenerate(self):
        assert simp_pad_west_reg(TrueC()) == [("",)]


@given(formulas(max_vars=3, max_depth=2, max_bound=2))
@settings(max_examples=100, deadline=None)
def test_width_closure(phi):
    nnf = convert_nnf(phi)
    n = num_vars(phi) + 1
    assert west_regex_of_vars(west_reg_aux(nnf, n), n)


@given(formulas(max_vars=2, max_depth=1, max_bound=2))
@settings(max_examples=50, deadline=None)
def test_transform_agrees_with_semantics(phi):
    n = num_vars(phi)
    m = complen(phi)
    if n * (m + 1) > 12:
        return
    plain = west_reg(phi)
    padded = simp_pad_west_reg(phi)
    assert all(len(r) == m for r in padded)
    for pi in traces_up_to(n, m + 1):
        if len(pi) >= m:
            expected = semantics(pi, phi)
            assert match(pi, plain) == expected
            assert match(pi, padded) == expected
