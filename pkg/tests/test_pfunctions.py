import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pfunc import (
    PKind,
    TestOrder,
    TestStatistic,
    bonferroni,
    canonic_version_of_statistic,
    classify_p_function,
    exact_p_value,
    exact_p_value_from_statistic,
    induce_order_from_statistic,
    induce_statistic_from_order,
    is_canonic_statistic,
    is_p_function,
    scale_statistic,
    tail_probability,
    validate_trial,
)
from pfunc.errors import (
    EmptyStatisticList,
    MissingStatisticValue,
    NegativeEpsilon,
    NonPositiveScale,
    UnknownOutcome,
)
from pfunc.worked_examples import coin_min_statistic, coin_trial

import oracles
from conftest import trial_and_order, trial_and_statistic, trials

CBA = TestOrder([["c"], ["b"], ["a"]])
ABC_UP = TestOrder([["a"], ["b"], ["c"]])
F_T0 = TestStatistic({"a": 1, "b": "1/100", "c": "1/1000"})


class TestTail:
    def test_t0(self, t0):
        assert tail_probability(t0, F_T0, Fraction(1, 100)) == Fraction(1, 100)

    def test_extremes(self, t0):
        assert tail_probability(t0, F_T0, Fraction(1, 2000)) == 0
        assert tail_probability(t0, F_T0, 1) == 1
        assert tail_probability(t0, F_T0, 5) == 1

    def test_errors(self, t0):
        with pytest.raises(NegativeEpsilon):
            tail_probability(t0, F_T0, Fraction(-1, 2))
        with pytest.raises(MissingStatisticValue):
            tail_probability(t0, TestStatistic({"a": 1}), 0)

    @settings(max_examples=200, deadline=None)
    @given(trial_and_statistic(), st.fractions(min_value=0, max_value=4, max_denominator=24))
    def test_matches_direct_summation(self, tf, eps):
        t, f = tf
        assert tail_probability(t, f, eps) == oracles.tail(dict(zip(t.ids, t.masses)), f, eps)


class TestExactPValue:
    def test_order_examples(self, t0):
        assert exact_p_value(t0, CBA, "b") == Fraction(1, 100)
        assert exact_p_value(t0, CBA, "a") == 1
        ab = validate_trial({"a": "1/2", "b": "1/2"})
        assert exact_p_value(ab, TestOrder([["a"], ["b"]]), "a") == Fraction(1, 2)

    def test_statistic_examples(self, t0):
        assert exact_p_value_from_statistic(coin_trial(42), coin_min_statistic(42), "k41") == Fraction(86, 2**42)
        const = TestStatistic({"a": 3, "b": 3, "c": 3})
        assert {exact_p_value_from_statistic(t0, const, x) for x in "abc"} == {1}
        f = TestStatistic({"a": 7, "b": 5, "c": 5})
        assert exact_p_value_from_statistic(t0, f, "c") == Fraction(1, 100)

    def test_unknown_outcome(self, t0):
        with pytest.raises(UnknownOutcome):
            exact_p_value(t0, CBA, "z")
        with pytest.raises(UnknownOutcome):
            exact_p_value_from_statistic(t0, F_T0, "z")

    def test_negative_observation(self, t0):
        f = TestStatistic({"a": 0, "b": -1, "c": -2})
        assert exact_p_value_from_statistic(t0, f, "b") == Fraction(1, 100)

    @settings(max_examples=200, deadline=None)
    @given(trial_and_statistic())
    def test_consistency_of_both_definitions(self, tf):
        t, f = tf
        o = induce_order_from_statistic(t, f)
        g = induce_statistic_from_order(t, o)
        for x in t.ids:
            p = exact_p_value(t, o, x)
            assert p == exact_p_value_from_statistic(t, f, x)
            assert p == exact_p_value_from_statistic(t, g, x)

    @settings(max_examples=200, deadline=None)
    @given(trial_and_order())
    def test_monotone_along_order(self, to):
        t, o = to
        for x, y in itertools.product(t.ids, repeat=2):
            if o.le(x, y):
                px, py = exact_p_value(t, o, x), exact_p_value(t, o, y)
                assert px <= py
                if o.rank(x) < o.rank(y):
                    assert px < py


class TestClassification:
    def test_canonic_is_exact(self, t0):
        assert classify_p_function(t0, F_T0).kind is PKind.EXACT
        assert classify_p_function(t0, F_T0).witness is None
        assert is_p_function(t0, F_T0)

    def test_constant_half(self, t0):
        assert not is_p_function(t0, TestStatistic({"a": "1/2", "b": "1/2", "c": "1/2"}))

    def test_doubled_is_conservative(self, t0):
        f = scale_statistic(F_T0, 2)
        assert f == {"a": 2, "b": Fraction(1, 50), "c": Fraction(1, 500)}
        assert is_p_function(t0, f)
        c = classify_p_function(t0, f)
        assert c.kind is PKind.CONSERVATIVE
        assert (c.witness.epsilon, c.witness.tail) == (Fraction(1, 500), Fraction(1, 1000))

    def test_halved_is_not(self, t0):
        c = classify_p_function(t0, scale_statistic(F_T0, Fraction(1, 2)))
        assert c.kind is PKind.NOT_P_FUNCTION
        assert (c.witness.epsilon, c.witness.tail) == (Fraction(1, 2000), Fraction(1, 1000))

    def test_negative_values_fail_at_zero(self, t0):
        c = classify_p_function(t0, TestStatistic({"a": 1, "b": 1, "c": -1}))
        assert c.kind is PKind.NOT_P_FUNCTION
        assert (c.witness.epsilon, c.witness.tail) == (0, Fraction(1, 1000))

    def test_zero_value_fails_at_zero(self, t0):
        c = classify_p_function(t0, TestStatistic({"a": 1, "b": 1, "c": 0}))
        assert c.kind is PKind.NOT_P_FUNCTION
        assert c.witness.epsilon == 0

    @settings(max_examples=400, deadline=None)
    @given(trial_and_statistic(values=st.fractions(min_value=-1, max_value=2, max_denominator=16)))
    def test_agrees_with_dense_grid_oracle(self, tf):
        t, f = tf
        probs = dict(zip(t.ids, t.masses))
        c = classify_p_function(t, f)
        assert c.kind.value == oracles.classify_dense(probs, dict(f))
        if c.kind is PKind.NOT_P_FUNCTION:
            assert c.witness.tail > c.witness.epsilon
            assert oracles.tail(probs, f, c.witness.epsilon) == c.witness.tail
        if c.kind is PKind.CONSERVATIVE:
            assert c.witness.epsilon in set(f.values())
            assert c.witness.tail < c.witness.epsilon

    @settings(max_examples=300, deadline=None)
    @given(trial_and_statistic())
    def test_exact_iff_canonic(self, tf):
        t, f = tf
        assert (classify_p_function(t, f).kind is PKind.EXACT) == is_canonic_statistic(t, f)

    @settings(max_examples=200, deadline=None)
    @given(trial_and_statistic())
    def test_canonic_tails(self, tf):
        t, f = tf
        fhat = canonic_version_of_statistic(t, f)
        for eps in set(fhat.values()):
            assert tail_probability(t, fhat, eps) == eps
        for eps in oracles.dense_grid(fhat.values()):
            assert tail_probability(t, fhat, eps) <= eps


class TestScaling:
    def test_identity(self):
        assert scale_statistic(F_T0, 1) == F_T0

    @pytest.mark.parametrize("c", [0, -1, "-1/2"])
    def test_non_positive(self, c):
        with pytest.raises(NonPositiveScale):
            scale_statistic(F_T0, c)

    @settings(max_examples=200, deadline=None)
    @given(trial_and_order(), st.fractions(min_value=1, max_value=5, max_denominator=10))
    def test_up_scaling_keeps_p_function(self, to, c):
        t, o = to
        f = induce_statistic_from_order(t, o)
        kind = classify_p_function(t, scale_statistic(f, c)).kind
        assert kind is (PKind.EXACT if c == 1 else PKind.CONSERVATIVE)

    @settings(max_examples=200, deadline=None)
    @given(trial_and_order(), st.fractions(min_value=0, max_value=1, max_denominator=10)
           .filter(lambda c: 0 < c < 1))
    def test_down_scaling_breaks_it(self, to, c):
        t, o = to
        f = induce_statistic_from_order(t, o)
        v = classify_p_function(t, scale_statistic(f, c))
        assert v.kind is PKind.NOT_P_FUNCTION
        eps = v.witness.epsilon / c
        assert eps in set(f.values()) and v.witness.tail == eps


class TestBonferroni:
    def test_single(self, t0):
        assert bonferroni(t0, [F_T0]) == F_T0

    def test_two_copies(self, t0):
        f = bonferroni(t0, [F_T0, F_T0])
        assert f == {"a": 2, "b": Fraction(1, 50), "c": Fraction(1, 500)}
        assert classify_p_function(t0, f).kind is PKind.CONSERVATIVE

    def test_opposite_orders(self, t0):
        f1 = induce_statistic_from_order(t0, CBA)
        f2 = induce_statistic_from_order(t0, ABC_UP)
        f = bonferroni(t0, [f1, f2])
        assert dict(f) == {x: 2 * min(f1[x], f2[x]) for x in "abc"}
        assert f == {"a": Fraction(99, 50), "b": Fraction(1, 50), "c": Fraction(1, 500)}
        assert is_p_function(t0, f)

    def test_errors(self, t0):
        with pytest.raises(EmptyStatisticList):
            bonferroni(t0, [])
        with pytest.raises(MissingStatisticValue):
            bonferroni(t0, [F_T0, TestStatistic({"a": 1})])

    def test_mixed_denominators(self, t0):
        g = TestStatistic({"a": "1/3", "b": "1/7", "c": 5})
        assert bonferroni(t0, [F_T0, g]) == {"a": Fraction(2, 3), "b": Fraction(1, 50), "c": Fraction(1, 500)}

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_valid_for_p_functions(self, data):
        t = data.draw(trials(max_size=6))
        n = data.draw(st.integers(1, 4))
        from conftest import orders_on
        fs = []
        for _ in range(n):
            f = induce_statistic_from_order(t, data.draw(orders_on(t.ids)))
            c = data.draw(st.sampled_from([1, Fraction(3, 2), 2]))
            fs.append(scale_statistic(f, c))
        combined = bonferroni(t, fs)
        assert is_p_function(t, combined)
        assert bonferroni(t, list(reversed(fs))) == combined
