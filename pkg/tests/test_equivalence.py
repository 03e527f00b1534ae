import pytest
from hypothesis import given, settings

from conftest import match_set, sized_west_regexes, traces_up_to
from west import (
    And,
    BudgetExceededError,
    Global,
    Not,
    Or,
    Prop,
    Release,
    TrueC,
    brute_force_sat_traces,
    expand_trace_regex,
    match,
    naive_equivalence,
    oracle_check,
    pad_to,
    parse_formula,
    trace_to_bits,
)
from west.equivalence import formula_equivalence


class TestExpandTraceRegex:
    def test_single_wildcard(self):
        assert expand_trace_regex(("S0",)) == {("00",), ("10",)}

    def test_no_wildcards(self):
        assert expand_trace_regex(("01",)) == {("01",)}

    def test_two_wildcards(self):
        assert len(expand_trace_regex(("S", "S"))) == 4

    def test_worked_counts(self):
        assert len(expand_trace_regex(("10S",))) == 2
        assert len(expand_trace_regex(("S00", "0S0"))) == 4

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceededError):
            expand_trace_regex(("SSS",), budget=2)


class TestNaiveEquivalence:
    def test_worked_example(self):
        verdict = naive_equivalence([("SS",)], [("S1",), ("1S",), ("00",)], 2)
        assert verdict.outcome == "equivalent"

    def test_reflexivity(self):
        regex = [("10", "S1"), ("0S",)]
        assert naive_equivalence(regex, regex, 2).outcome == "equivalent"

    def test_disjoint_singletons(self):
        verdict = naive_equivalence([("1",)], [("0",)], 1)
        assert verdict.outcome == "inequivalent"
        assert verdict.witness == ("1",)

    def test_trailing_arbitrary_states_are_not_mismatches(self):
        verdict = naive_equivalence([("1",)], [("1", "S")], 1)
        assert verdict.outcome == "equivalent"

    def test_limit(self):
        verdict = naive_equivalence([("S" * 8,) * 4], [("1" * 8,)], 8, budget=100)
        assert verdict.outcome == "limit"
        assert verdict.detail

    def test_witness_has_no_wildcards(self):
        verdict = naive_equivalence([("S1",)], [("11",)], 2)
        assert verdict.outcome == "inequivalent"
        assert all("S" not in s for s in verdict.witness)


class TestFormulaEquivalence:
    def test_tautologies(self):
        phi1 = parse_formula("true")
        phi2 = parse_formula("p0 | !p0")
        assert formula_equivalence(phi1, phi2).outcome == "equivalent"

    def test_distinct_atoms(self):
        verdict = formula_equivalence(Prop(0), Prop(1))
        assert verdict.outcome == "inequivalent"
        assert verdict.witness == ("10",)

    def test_future_unrolling(self):
        phi1 = parse_formula("F[0,1] p0")
        phi2 = parse_formula("p0 | F[1,1] p0")
        assert formula_equivalence(phi1, phi2).outcome == "equivalent"

    def test_different_horizons(self):
        phi1 = parse_formula("G[0,1] p0")
        phi2 = parse_formula("p0 & G[1,1] p0")
        assert formula_equivalence(phi1, phi2).outcome == "equivalent"


class TestBruteForceSatTraces:
    def test_single_prop(self):
        assert brute_force_sat_traces(Prop(0), 1) == {(frozenset({0}),)}

    def test_true_matches_everything(self):
        assert len(brute_force_sat_traces(TrueC(), 2)) == 1  # n = 0: one trace
        assert len(brute_force_sat_traces(Or(Prop(0), TrueC()), 2)) == 4

    def test_contradiction(self):
        assert brute_force_sat_traces(And(Prop(0), Not(Prop(0))), 1) == set()

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            brute_force_sat_traces(Prop(4), 5, budget=20)


class TestOracleCheck:
    def test_global(self):
        assert oracle_check(Global(Prop(0), 0, 1))

    def test_release(self):
        assert oracle_check(Release(Prop(0), Prop(1), 0, 2))

    def test_catches_shift_mutation(self, monkeypatch):
        import west.transform as transform
        from west.ops import arbitrary_trace

        def shift_one_short(regex, n, t):
            return [arbitrary_trace(n, max(t - 1, 0)) + r for r in regex]

        monkeypatch.setattr(transform, "shift", shift_one_short)
        assert not oracle_check(Global(Prop(0), 1, 2))

    def test_catches_shift_mutation_overlong(self, monkeypatch):
        # Shifting one too far overruns the computation length; the
        # pipeline rejects that loudly rather than silently matching.
        import west.transform as transform
        from west.ops import arbitrary_trace

        def shift_one_long(regex, n, t):
            return [arbitrary_trace(n, t + 1) + r for r in regex]

        monkeypatch.setattr(transform, "shift", shift_one_long)
        with pytest.raises(ValueError):
            oracle_check(Global(Prop(0), 1, 2))

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            oracle_check(Global(Prop(2), 0, 9), budget=16)


def test_expansion_exactness():
    # A trace of the regex's own length matches iff its bit string is in
    # the expansion.
    r = ("S1", "0S")
    expansion = expand_trace_regex(r)
    for pi in traces_up_to(2, 2):
        if len(pi) == len(r):
            assert (trace_to_bits(pi, 2) in expansion) == match(pi, [r])


@given(sized_west_regexes(), sized_west_regexes())
@settings(max_examples=100, deadline=None)
def test_equivalence_soundness(case1, case2):
    n, left = case1
    _, right = case2
    right = [tuple(s[:n].ljust(n, "S") for s in r) for r in right]
    verdict = naive_equivalence(left, right, n)
    m = max((len(r) for r in [*left, *right]), default=0)
    padded_left = pad_to(left, m, n)
    padded_right = pad_to(right, m, n)
    if verdict.outcome == "equivalent":
        assert match_set(padded_left, n, m + 1) == match_set(padded_right, n, m + 1)
    else:
        assert verdict.outcome == "inequivalent"
        witness = [set(k for k, c in enumerate(s) if c == "1") for s in verdict.witness]
        assert match(witness, padded_left) != match(witness, padded_right)
