from fractions import Fraction

import pytest
from hypothesis import strategies as st

from pfunc import TestOrder, TestStatistic, Trial, validate_trial

T0_PROBS = {"a": Fraction(990, 1000), "b": Fraction(9, 1000), "c": Fraction(1, 1000)}


@pytest.fixture
def t0():
    return validate_trial(T0_PROBS)


@pytest.fixture
def t0_probs():
    return dict(T0_PROBS)


@st.composite
def trials(draw, min_size=1, max_size=8):
    n = draw(st.integers(min_size, max_size))
    weights = draw(st.lists(st.integers(1, 50), min_size=n, max_size=n))
    total = sum(weights)
    return Trial(tuple((f"o{i}", Fraction(w, total)) for i, w in enumerate(weights)))


@st.composite
def orders_on(draw, ids):
    ranks = draw(st.lists(st.integers(0, len(ids) - 1), min_size=len(ids), max_size=len(ids)))
    used = sorted(set(ranks))
    return TestOrder([{x for x, r in zip(ids, ranks) if r == u} for u in used])


small_rationals = st.fractions(min_value=-2, max_value=3, max_denominator=12)


@st.composite
def statistics_on(draw, ids, values=small_rationals):
    return TestStatistic({x: draw(values) for x in ids})


@st.composite
def trial_and_order(draw, max_size=8):
    t = draw(trials(max_size=max_size))
    return t, draw(orders_on(t.ids))


@st.composite
def trial_and_statistic(draw, max_size=8, values=small_rationals):
    t = draw(trials(max_size=max_size))
    return t, draw(statistics_on(t.ids, values))


# one PASS/FAIL line per acceptance criterion in the terminal summary
_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, text): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, text = marker.args
    prev = _ACCEPTANCE.get(number, (text, "PASS"))[1]
    if report.failed or prev == "FAIL":
        status = "FAIL"
    elif report.when == "call":
        status = "PASS"
    else:
        return
    _ACCEPTANCE[number] = (text, status)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        text, status = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {text}")
