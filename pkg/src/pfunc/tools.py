"""Test orders, test pyramids and test statistics, and the maps between them.

Conventions: smaller outcomes, smaller events and smaller statistic values all
mean stronger evidence against the null hypothesis.

* A :class:`TestOrder` is a linear preorder stored as an ordered partition of
  the outcomes into classes of quasi-equivalent outcomes; class 0 is the
  bottom.
* A :class:`TestPyramid` is a chain of events, strictly increasing under
  inclusion.
* A :class:`TestStatistic` maps outcome ids to exact rationals.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from . import kernels
from .errors import (
    InvalidOrder,
    InvalidPyramid,
    MemberOutsideOmega,
    MissingStatisticValue,
    OrderTrialMismatch,
    UnknownMember,
    UnknownOutcome,
)
from .rational import parse_rational


@dataclass(frozen=True)
class TestOrder:
    """Linear preorder as ranked quasi-equivalence classes."""

    __test__ = False

    classes: tuple

    def __post_init__(self):
        classes = tuple(frozenset(c) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        seen = set()
        for c in classes:
            if not c:
                raise InvalidOrder("order classes must be non-empty")
            if seen & c:
                raise InvalidOrder(f"outcomes in more than one class: {sorted(seen & c)}")
            seen |= c

    @cached_property
    def omega(self) -> frozenset:
        return frozenset().union(*self.classes)

    @cached_property
    def _rank(self) -> dict:
        return {x: i for i, c in enumerate(self.classes) for x in c}

    def rank(self, x: str) -> int:
        try:
            return self._rank[x]
        except KeyError:
            raise UnknownOutcome(f"{x!r} is not ordered by this test order") from None

    def le(self, x: str, y: str) -> bool:
        return self.rank(x) <= self.rank(y)


@dataclass(frozen=True)
class TestPyramid:
    """Events E_0 < E_1 < ... with each E_i a proper subset of E_{i+1}."""

    __test__ = False

    events: tuple

    def __post_init__(self):
        events = tuple(frozenset(e) for e in self.events)
        object.__setattr__(self, "events", events)
        for a, b in zip(events, events[1:]):
            if not a < b:
                raise InvalidPyramid(
                    "pyramid events must be strictly increasing under inclusion"
                )

    @classmethod
    def from_unordered(cls, events):
        """Sort a family of events by size before validating it as a chain."""
        return cls(sorted((frozenset(e) for e in events), key=len))

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)


class TestStatistic(Mapping):
    """Immutable map outcome id -> Fraction.

    Besides the Fraction view a statistic can carry a scaled-integer view
    (numerators over one denominator, aligned to a tuple of ids) that the
    kernels consume.  Statistics produced by the kernels are built from that
    view and only materialize Fractions when someone reads them.
    """

    __test__ = False
    __slots__ = ("_values", "_scaled")

    def __init__(self, values: Mapping):
        self._values = {x: parse_rational(v) for x, v in dict(values).items()}
        self._scaled = {}

    @classmethod
    def _from_scaled(cls, ids, nums, den):
        self = cls.__new__(cls)
        self._values = None
        self._scaled = {tuple(ids): (tuple(nums), den)}
        return self

    @property
    def values_map(self) -> dict:
        if self._values is None:
            (ids, (nums, den)), = self._scaled.items()
            self._values = {x: Fraction(n, den) for x, n in zip(ids, nums)}
        return self._values

    def __getitem__(self, x):
        return self.values_map[x]

    def __iter__(self):
        return iter(self.values_map)

    def __len__(self):
        if self._values is None:
            return len(next(iter(self._scaled)))
        return len(self._values)

    def __repr__(self):
        inner = ", ".join(f"{x!r}: {str(v)!r}" for x, v in self.values_map.items())
        return f"TestStatistic({{{inner}}})"

    __hash__ = None

    def scaled(self, ids: tuple) -> tuple:
        """``(numerators, denominator)`` of the values at ``ids``, in that order.

        Raises MissingStatisticValue when an id has no value and UnknownOutcome
        when the statistic is defined outside ``ids``.
        """
        hit = self._scaled.get(ids)
        if hit is not None:
            return hit
        values = self.values_map
        missing = [x for x in ids if x not in values]
        if missing:
            raise MissingStatisticValue(f"statistic undefined at {sorted(missing)}")
        if len(values) != len(ids):
            extra = sorted(set(values) - set(ids))
            raise UnknownOutcome(f"statistic defined outside the sample space: {extra}")
        vals = [values[x] for x in ids]
        den = lcm(*(v.denominator for v in vals))
        hit = (tuple(v.numerator * (den // v.denominator) for v in vals), den)
        self._scaled[ids] = hit
        return hit


def _require_covers(space, order: TestOrder):
    if order.omega != space.omega:
        raise OrderTrialMismatch("the test order does not partition the trial's outcomes")


def orders_equal(o1: TestOrder, o2: TestOrder) -> bool:
    return o1.classes == o2.classes


def downward_closure(order: TestOrder, x: str) -> frozenset:
    """[<= x] = {y : y <= x}."""
    r = order.rank(x)
    return frozenset().union(*order.classes[: r + 1])


def is_downward_closed(order: TestOrder, event) -> bool:
    e = frozenset(event)
    if not e <= order.omega:
        raise UnknownMember(f"not ordered: {sorted(e - order.omega)}")
    if not e:
        return True
    top = max(order.rank(y) for y in e)
    return all(c <= e for c in order.classes[:top + 1])


def induce_pyramid_from_order(order: TestOrder) -> TestPyramid:
    """The family of downward closures [<= x], one per class."""
    events = []
    acc = frozenset()
    for c in order.classes:
        acc = acc | c
        events.append(acc)
    return TestPyramid(events)


def induce_order_from_pyramid(omega, pyramid: TestPyramid) -> TestOrder:
    """x <= y iff every pyramid member containing y also contains x.

    In a chain this reduces to comparing the index of the first member that
    contains each outcome; outcomes in no member share the top class.
    """
    omega = frozenset(omega)
    for e in pyramid.events:
        if not e <= omega:
            raise MemberOutsideOmega(f"pyramid event leaves the sample space: {sorted(e - omega)}")
    n = len(pyramid.events)
    first = {}
    for x in omega:
        first[x] = next((i for i, e in enumerate(pyramid.events) if x in e), n)
    buckets = {}
    for x, i in first.items():
        buckets.setdefault(i, set()).add(x)
    return TestOrder([buckets[i] for i in sorted(buckets)])


def induce_statistic_from_order(space, order: TestOrder) -> TestStatistic:
    """f(x) = P[<= x]."""
    _require_covers(space, order)
    ids = space.ids
    masses, den = space.scaled_masses
    rank = order._rank
    cum = kernels.cumulative_masses([rank[x] for x in ids], masses)
    return TestStatistic._from_scaled(ids, cum, den)


def induce_order_from_statistic(space, f: TestStatistic) -> TestOrder:
    """Level sets of ``f`` in ascending order of value."""
    ids = space.ids
    nums, _ = f.scaled(ids)
    return TestOrder([{ids[i] for i in g} for g in kernels.level_groups(nums)])


def canonic_version_of_pyramid(omega, pyramid: TestPyramid) -> TestPyramid:
    return induce_pyramid_from_order(induce_order_from_pyramid(omega, pyramid))


def is_canonic_pyramid(omega, pyramid: TestPyramid) -> bool:
    return canonic_version_of_pyramid(omega, pyramid).events == pyramid.events


def pyramids_equivalent(omega, p1: TestPyramid, p2: TestPyramid) -> bool:
    return orders_equal(
        induce_order_from_pyramid(omega, p1), induce_order_from_pyramid(omega, p2)
    )


def canonic_version_of_statistic(space, f: TestStatistic) -> TestStatistic:
    """f^(x) = P[f <= f(x)]."""
    ids = space.ids
    nums, _ = f.scaled(ids)
    masses, den = space.scaled_masses
    return TestStatistic._from_scaled(ids, kernels.cumulative_masses(nums, masses), den)


def is_canonic_statistic(space, f: TestStatistic) -> bool:
    ids = space.ids
    nums, vden = f.scaled(ids)
    masses, mden = space.scaled_masses
    return kernels.is_canonic(nums, vden, masses, mden)


def statistics_equivalent(space, f1: TestStatistic, f2: TestStatistic) -> bool:
    return orders_equal(
        induce_order_from_statistic(space, f1), induce_order_from_statistic(space, f2)
    )

