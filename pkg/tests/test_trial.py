import itertools
from fractions import Fraction

import pytest
from hypothesis import given

from pfunc import (
    AggregatedTrial,
    Trial,
    event_probability,
    expand_aggregated,
    rank_events_by_impugning_power,
    validate_trial,
)
from pfunc.errors import (
    DuplicateOutcomeId,
    EmptyEventInInput,
    EmptySpace,
    MalformedInput,
    NonPositiveClassSize,
    NonPositiveProbability,
    ProbabilitySumNotOne,
    TooLargeToExpand,
    UnknownMember,
)
from pfunc.worked_examples import coin_trial

from conftest import trials
from oracles import grid_trials


def powerset(ids):
    return [frozenset(c) for r in range(len(ids) + 1) for c in itertools.combinations(ids, r)]


class TestValidateTrial:
    def test_t0_is_valid(self, t0):
        assert t0.probability("a") == Fraction(99, 100)
        assert t0.ids == ("a", "b", "c")

    def test_single_outcome(self):
        assert validate_trial({"a": 1}).probability("a") == 1

    def test_sum_not_one_reports_sum(self):
        with pytest.raises(ProbabilitySumNotOne) as err:
            validate_trial({"a": "1/2", "b": "1/3"})
        assert err.value.total == Fraction(5, 6)

    def test_accepts_pairs_and_strings(self):
        t = validate_trial([("x", "1/4"), ("y", "3/4")])
        assert t.masses == (Fraction(1, 4), Fraction(3, 4))

    @pytest.mark.parametrize(
        "raw, exc",
        [
            ({}, EmptySpace),
            ([("a", "1/2"), ("a", "1/2")], DuplicateOutcomeId),
            ({"a": 0, "b": 1}, NonPositiveProbability),
            ({"a": "-1/2", "b": "3/2"}, NonPositiveProbability),
            ({"a": 0.5, "b": 0.5}, MalformedInput),
            ({"": 1}, MalformedInput),
            ({"a": "1/0"}, MalformedInput),
        ],
    )
    def test_rejects(self, raw, exc):
        with pytest.raises(exc):
            validate_trial(raw)


class TestEventProbability:
    def test_t0(self, t0):
        assert event_probability(t0, {"b", "c"}) == Fraction(1, 100)

    def test_empty_and_full(self, t0):
        assert event_probability(t0, set()) == 0
        assert event_probability(t0, t0.omega) == 1

    def test_unknown_member(self, t0):
        with pytest.raises(UnknownMember):
            event_probability(t0, {"z"})

    def test_aggregated_uses_size_times_p(self):
        coin = coin_trial(3)
        assert event_probability(coin, {"k1"}) == Fraction(3, 8)

    @pytest.mark.parametrize("probs", list(grid_trials(4, 6)) + list(grid_trials(5, 5)))
    def test_additive_and_monotone_exhaustively(self, probs):
        t = validate_trial(probs)
        events = powerset(t.ids)
        for e1, e2 in itertools.product(events, repeat=2):
            p1, p2 = event_probability(t, e1), event_probability(t, e2)
            if not e1 & e2:
                assert event_probability(t, e1 | e2) == p1 + p2
            if e1 <= e2:
                assert p1 <= p2
                if e1 < e2:
                    assert p1 < p2

    @given(trials())
    def test_total_mass_is_one(self, t):
        assert sum(t.masses) == 1
        assert all(m > 0 for m in t.masses)


class TestRanking:
    def test_t0_order_of_increasing_impugning_power(self, t0):
        events = [e for e in powerset("abc") if e]
        groups = rank_events_by_impugning_power(t0, events)
        assert all(len(g) == 1 for g in groups)
        flat = ["".join(sorted(g[0])) for g in groups]
        assert flat == ["abc", "ab", "ac", "a", "bc", "b", "c"]

    def test_single_event(self, t0):
        assert rank_events_by_impugning_power(t0, [{"a"}]) == [[frozenset("a")]]

    def test_ties_grouped_in_input_order(self):
        t = validate_trial({"a": "1/2", "b": "1/2"})
        groups = rank_events_by_impugning_power(t, [{"b"}, {"a"}])
        assert groups == [[frozenset("b"), frozenset("a")]]

    def test_empty_event_rejected(self, t0):
        with pytest.raises(EmptyEventInInput):
            rank_events_by_impugning_power(t0, [{"a"}, set()])


class TestAggregated:
    def test_expand_coin_3(self):
        t = expand_aggregated(coin_trial(3), limit=100)
        assert len(t) == 8
        assert set(t.masses) == {Fraction(1, 8)}
        assert "k1#2" in t.omega

    def test_expand_single(self):
        t = expand_aggregated(AggregatedTrial((("only", 1, 1),)), limit=1)
        assert t.ids == ("only#0",)

    def test_too_large(self):
        with pytest.raises(TooLargeToExpand):
            expand_aggregated(coin_trial(42), limit=10**6)

    def test_expansion_preserves_class_event_probabilities(self):
        agg = AggregatedTrial((("x", 2, "1/8"), ("y", 3, "1/6"), ("z", 1, "1/4")))
        flat = expand_aggregated(agg, limit=10)
        for e in powerset(agg.ids):
            lifted = {x for x in flat.ids if x.split("#")[0] in e}
            assert event_probability(agg, e) == event_probability(flat, lifted)

    @pytest.mark.parametrize(
        "rows, exc",
        [
            ((), EmptySpace),
            ((("x", 0, 1),), NonPositiveClassSize),
            ((("x", 2, "1/3"),), ProbabilitySumNotOne),
            ((("x", 1, "1/2"), ("x", 1, "1/2")), DuplicateOutcomeId),
        ],
    )
    def test_rejects(self, rows, exc):
        with pytest.raises(exc):
            AggregatedTrial(rows)


def test_trial_is_hashable_and_comparable():
    a = Trial((("a", "1/2"), ("b", "1/2")))
    b = validate_trial({"a": Fraction(1, 2), "b": Fraction(1, 2)})
    assert a == b and hash(a) == hash(b)
