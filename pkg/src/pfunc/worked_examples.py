"""Coin and lottery examples, and the data-snooping simulation.

Lottery specs may describe bulk participants: an entry with ``count > 1``
stands for that many anonymous people with the same ticket count and the same
neighbours.  Such twins are at the same distance from the organizer, so BFS on
the quotient graph gives every member's distance and the trial can be kept
aggregated (one class per entry) even with millions of people.
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import InvalidLotterySpec, NoTicketsSold, OutOfRange
from .pfunctions import exact_p_value_from_statistic, tail_probability
from .rng import MASK64, XorShift64Star
from .tools import TestStatistic
from .trial import AggregatedTrial, Trial

MAX_TOSSES = 64


def _check_tosses(n):
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= MAX_TOSSES:
        raise OutOfRange(f"number of tosses must be an integer in 1..{MAX_TOSSES}, got {n!r}")


def coin_class_id(heads: int) -> str:
    return f"k{heads}"


def coin_trial(n: int) -> AggregatedTrial:
    """n fair tosses, aggregated by number of heads: class k has C(n, k) outcomes."""
    _check_tosses(n)
    p = Fraction(1, 2**n)
    return AggregatedTrial(tuple((coin_class_id(k), comb(n, k), p) for k in range(n + 1)))


def coin_min_statistic(n: int) -> TestStatistic:
    """M = min(heads, tails) on the classes of :func:`coin_trial`."""
    _check_tosses(n)
    return TestStatistic({coin_class_id(k): min(k, n - k) for k in range(n + 1)})


def coin_p_value(n: int, observed_min: int) -> Fraction:
    """P[M <= observed_min] for n fair tosses."""
    _check_tosses(n)
    if isinstance(observed_min, bool) or not isinstance(observed_min, int) \
            or not 0 <= observed_min <= n // 2:
        raise OutOfRange(f"observed min must be in 0..{n // 2}, got {observed_min!r}")
    return exact_p_value_from_statistic(
        coin_trial(n), coin_min_statistic(n), coin_class_id(observed_min)
    )


@dataclass(frozen=True)
class Participant:
    id: str
    tickets: int
    count: int = 1


@dataclass(frozen=True)
class LotterySpec:
    organizer: str
    participants: tuple
    edges: tuple = field(default=())

    def __post_init__(self):
        people = tuple(
            p if isinstance(p, Participant) else Participant(*p) for p in self.participants
        )
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "participants", people)
        object.__setattr__(self, "edges", edges)
        if not isinstance(self.organizer, str) or not self.organizer:
            raise InvalidLotterySpec("the organizer needs a non-empty id")
        seen = set()
        for p in people:
            if not isinstance(p.id, str) or not p.id:
                raise InvalidLotterySpec(f"participant ids must be non-empty strings: {p.id!r}")
            if p.id in seen:
                raise InvalidLotterySpec(f"duplicate participant {p.id!r}")
            seen.add(p.id)
            for name, v in (("tickets", p.tickets), ("count", p.count)):
                if isinstance(v, bool) or not isinstance(v, int):
                    raise InvalidLotterySpec(f"{p.id}: {name} must be an integer")
            if p.tickets < 0:
                raise InvalidLotterySpec(f"{p.id}: negative ticket count")
            if p.count < 1:
                raise InvalidLotterySpec(f"{p.id}: count must be at least 1")
            if p.id == self.organizer and p.count != 1:
                raise InvalidLotterySpec("the organizer is a single person")
        vertices = seen | {self.organizer}
        for e in edges:
            if len(e) != 2:
                raise InvalidLotterySpec(f"an edge joins two vertices: {e!r}")
            a, b = e
            if a not in vertices or b not in vertices:
                raise InvalidLotterySpec(f"edge {e!r} references an unknown vertex")
            if a == b:
                raise InvalidLotterySpec(f"self-loop on {a!r}")
        if sum(p.tickets * p.count for p in people) < 1:
            raise NoTicketsSold("no lottery tickets were sold")

    @property
    def total_tickets(self) -> int:
        return sum(p.tickets * p.count for p in self.participants)

    @property
    def vertex_count(self) -> int:
        n = sum(p.count for p in self.participants)
        if all(p.id != self.organizer for p in self.participants):
            n += 1
        return n

    @property
    def is_aggregated(self) -> bool:
        return any(p.count != 1 for p in self.participants)


def lottery_trial(spec: LotterySpec):
    """Winner distribution: P(X) = tickets(X) / total tickets.

    Returns an explicit :class:`Trial` when every entry is one person, and an
    :class:`AggregatedTrial` (one class per bulk entry) otherwise.  People
    without tickets are vertices of the graph but not outcomes.
    """
    total = spec.total_tickets
    holders = [p for p in spec.participants if p.tickets > 0]
    if spec.is_aggregated:
        return AggregatedTrial(tuple((p.id, p.count, Fraction(p.tickets, total)) for p in holders))
    return Trial(tuple((p.id, Fraction(p.tickets, total)) for p in holders))


def graph_distances(spec: LotterySpec) -> dict:
    """BFS distance from the organizer to every reachable vertex."""
    adj = {}
    for a, b in spec.edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    dist = {spec.organizer: 0}
    queue = deque([spec.organizer])
    while queue:
        v = queue.popleft()
        for w in adj.get(v, ()):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def lottery_distance_statistic(spec: LotterySpec) -> TestStatistic:
    """Graph distance from the organizer for every ticket holder.

    Unreachable holders get the vertex count, which exceeds every real distance.
    """
    dist = graph_distances(spec)
    unreachable = spec.vertex_count
    return TestStatistic(
        {p.id: dist.get(p.id, unreachable) for p in spec.participants if p.tickets > 0}
    )


def lottery_p_value(spec: LotterySpec, threshold: int) -> Fraction:
    """P[distance <= threshold] = tickets held within ``threshold`` / total."""
    if isinstance(threshold, bool) or not isinstance(threshold, int) or threshold < 0:
        raise OutOfRange(f"threshold must be a non-negative integer, got {threshold!r}")
    # real distances stay below the unreachable sentinel, so clamping keeps
    # unreachable holders out without changing anything else
    threshold = min(threshold, spec.vertex_count - 1)
    return tail_probability(lottery_trial(spec), lottery_distance_statistic(spec), threshold)


@dataclass(frozen=True)
class SnoopingReport:
    repetitions_run: int
    triggered: bool
    naive_p: Fraction
    corrected_p: Fraction
    seed: int


def snooping_simulation(n_tosses: int, threshold: int, seed: int, max_reps: int) -> SnoopingReport:
    """Repeat n fair tosses until min(heads, tails) <= threshold or max_reps runs.

    Each repetition consumes one generator draw; its low ``n_tosses`` bits are
    the tosses (1 = heads).
    """
    _check_tosses(n_tosses)
    if isinstance(max_reps, bool) or not isinstance(max_reps, int) or max_reps < 1:
        raise OutOfRange(f"max_reps must be a positive integer, got {max_reps!r}")
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed <= MASK64:
        raise OutOfRange(f"seed must be an integer in 0..2**64-1, got {seed!r}")
    naive_p = coin_p_value(n_tosses, threshold)
    rng = XorShift64Star(seed)
    triggered = False
    reps = 0
    while reps < max_reps:
        reps += 1
        heads = bin(rng.bits(n_tosses)).count("1")
        if min(heads, n_tosses - heads) <= threshold:
            triggered = True
            break
    return SnoopingReport(reps, triggered, naive_p, reps * naive_p, seed)
