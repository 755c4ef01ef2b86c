"""Finite probability trials, events and event probabilities.

Two representations share one interface (``ids``, ``omega``, ``mass``):

* :class:`Trial` lists every outcome with its probability.
* :class:`AggregatedTrial` lists classes of equiprobable outcomes with a size
  and a per-element probability.  Statistics that are constant on classes can
  then be evaluated on spaces far too large to enumerate (2**42 coin tosses).
  For an aggregated trial the "outcomes" seen by the test tools are the class
  ids and the mass of a class is ``size * p``.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from .errors import (
    DuplicateOutcomeId,
    EmptyEventInInput,
    EmptySpace,
    MalformedInput,
    NonPositiveClassSize,
    NonPositiveProbability,
    ProbabilitySumNotOne,
    TooLargeToExpand,
    UnknownMember,
    UnknownOutcome,
)
from .rational import parse_integer, parse_rational

Event = frozenset  # an event is a frozenset of outcome (or class) ids


class _Space:
    """Shared behaviour of explicit and aggregated trials."""

    @cached_property
    def omega(self) -> frozenset:
        return frozenset(self.ids)

    @cached_property
    def _mass_by_id(self) -> dict:
        return dict(zip(self.ids, self.masses))

    @cached_property
    def _position(self) -> dict:
        return {x: i for i, x in enumerate(self.ids)}

    def index(self, x: str) -> int:
        try:
            return self._position[x]
        except KeyError:
            raise UnknownOutcome(f"unknown outcome {x!r}") from None

    def mass(self, x: str) -> Fraction:
        try:
            return self._mass_by_id[x]
        except KeyError:
            raise UnknownMember(f"unknown outcome {x!r}") from None

    @cached_property
    def scaled_masses(self) -> tuple:
        """``(numerators, denominator)`` with masses[i] == numerators[i]/denominator."""
        den = lcm(*(m.denominator for m in self.masses))
        return tuple(m.numerator * (den // m.denominator) for m in self.masses), den

    def __len__(self):
        return len(self.ids)


def _check_id(x):
    if not isinstance(x, str) or not x:
        raise MalformedInput(f"outcome ids must be non-empty strings, got {x!r}")


@dataclass(frozen=True, eq=True)
class Trial(_Space):
    """A finite probability space with every P(x) > 0 and sum P(x) = 1."""

    outcomes: tuple

    def __post_init__(self):
        pairs = tuple((x, parse_rational(p)) for x, p in self.outcomes)
        object.__setattr__(self, "outcomes", pairs)
        if not pairs:
            raise EmptySpace("a trial needs at least one outcome")
        seen = set()
        for x, p in pairs:
            _check_id(x)
            if x in seen:
                raise DuplicateOutcomeId(f"duplicate outcome id {x!r}")
            seen.add(x)
            if p <= 0:
                raise NonPositiveProbability(f"P({x}) = {p} is not positive")
        total = sum((p for _, p in pairs), Fraction(0))
        if total != 1:
            raise ProbabilitySumNotOne(total)

    @cached_property
    def ids(self) -> tuple:
        return tuple(x for x, _ in self.outcomes)

    @cached_property
    def masses(self) -> tuple:
        return tuple(p for _, p in self.outcomes)

    def probability(self, x: str) -> Fraction:
        return self.mass(x)


@dataclass(frozen=True, eq=True)
class AggregatedTrial(_Space):
    """Classes ``(class_id, size, per_element_probability)`` with sum size*p = 1."""

    classes: tuple

    def __post_init__(self):
        rows = tuple((c, parse_integer(n), parse_rational(p)) for c, n, p in self.classes)
        object.__setattr__(self, "classes", rows)
        if not rows:
            raise EmptySpace("an aggregated trial needs at least one class")
        seen = set()
        for c, n, p in rows:
            _check_id(c)
            if c in seen:
                raise DuplicateOutcomeId(f"duplicate class id {c!r}")
            seen.add(c)
            if n < 1:
                raise NonPositiveClassSize(f"class {c!r} has size {n}")
            if p <= 0:
                raise NonPositiveProbability(f"class {c!r} has probability {p}")
        total = sum((n * p for _, n, p in rows), Fraction(0))
        if total != 1:
            raise ProbabilitySumNotOne(total)

    @cached_property
    def ids(self) -> tuple:
        return tuple(c for c, _, _ in self.classes)

    @cached_property
    def masses(self) -> tuple:
        return tuple(n * p for _, n, p in self.classes)

    @cached_property
    def outcome_count(self) -> int:
        return sum(n for _, n, _ in self.classes)

    def size(self, class_id: str) -> int:
        for c, n, _ in self.classes:
            if c == class_id:
                return n
        raise UnknownMember(f"unknown class {class_id!r}")


def validate_trial(raw) -> Trial:
    """Build a :class:`Trial` from ``{id: p}`` or an iterable of ``(id, p)`` pairs.

    Probabilities may be ints, Fractions or ``"p/q"`` strings.
    """
    if isinstance(raw, Mapping):
        pairs = raw.items()
    elif isinstance(raw, Iterable) and not isinstance(raw, (str, bytes)):
        pairs = raw
    else:
        raise MalformedInput(f"cannot read a trial from {type(raw).__name__}")
    try:
        pairs = tuple((x, p) for x, p in pairs)
    except (TypeError, ValueError):
        raise MalformedInput("trial entries must be (id, probability) pairs") from None
    return Trial(pairs)


def as_event(space, members) -> frozenset:
    e = frozenset(members)
    unknown = e - space.omega
    if unknown:
        raise UnknownMember(f"not in the sample space: {sorted(unknown)}")
    return e


def event_probability(space, members) -> Fraction:
    """P(E): the exact sum of the masses of the members of ``E``."""
    e = as_event(space, members)
    return sum((space.mass(x) for x in e), Fraction(0))


def rank_events_by_impugning_power(space, events) -> list:
    """Sort events by decreasing probability (increasing impugning power).

    Returns a list of tie groups; inside a group the input order is kept.
    """
    keyed = []
    for e in events:
        e = as_event(space, e)
        if not e:
            raise EmptyEventInInput("the empty event never occurs and has no rank")
        keyed.append((event_probability(space, e), e))
    keyed.sort(key=lambda pe: pe[0], reverse=True)  # stable
    groups = []
    for p, e in keyed:
        if groups and groups[-1][0] == p:
            groups[-1][1].append(e)
        else:
            groups.append((p, [e]))
    return [g for _, g in groups]


def expand_aggregated(agg: AggregatedTrial, limit: int) -> Trial:
    """Explicit trial with one outcome ``"<class>#<k>"`` per class element."""
    if agg.outcome_count > limit:
        raise TooLargeToExpand(f"{agg.outcome_count} outcomes exceed the limit {limit}")
    return Trial(tuple((f"{c}#{k}", p) for c, n, p in agg.classes for k in range(n)))
