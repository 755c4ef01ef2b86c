"""Exact p-values, p-function classification, scaling and Bonferroni."""

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from . import kernels
from .errors import (
    EmptyStatisticList,
    NegativeEpsilon,
    NonPositiveScale,
)
from .rational import parse_rational
from .tools import TestOrder, TestStatistic, downward_closure
from .trial import event_probability


class PKind(enum.Enum):
    NOT_P_FUNCTION = "not-p-function"
    EXACT = "exact"
    CONSERVATIVE = "conservative"


@dataclass(frozen=True)
class Witness:
    epsilon: Fraction
    tail: Fraction


@dataclass(frozen=True)
class PFunctionClassification:
    """Verdict plus the (epsilon, P[f <= epsilon]) pair that justifies it.

    Not a p-function: tail > epsilon.  Conservative: epsilon is a value of f
    and tail < epsilon.  Exact verdicts carry no witness.
    """

    kind: PKind
    witness: Optional[Witness] = None

    @property
    def is_p_function(self) -> bool:
        return self.kind is not PKind.NOT_P_FUNCTION


_KINDS = {
    kernels.NOT_P_FUNCTION: PKind.NOT_P_FUNCTION,
    kernels.EXACT: PKind.EXACT,
    kernels.CONSERVATIVE: PKind.CONSERVATIVE,
}


def tail_probability(space, f: TestStatistic, eps) -> Fraction:
    """P[f <= eps]."""
    eps = parse_rational(eps)
    if eps < 0:
        raise NegativeEpsilon(f"epsilon must be non-negative, got {eps}")
    nums, vden = f.scaled(space.ids)
    masses, mden = space.scaled_masses
    # f(x) <= eps  <=>  nums[x] <= eps * vden; flooring keeps the comparison exact
    threshold = (eps * vden).__floor__()
    return Fraction(kernels.tail_mass(nums, masses, threshold), mden)


def exact_p_value(space, order: TestOrder, x: str) -> Fraction:
    """P[<= x] for the observed outcome ``x``."""
    return event_probability(space, downward_closure(order, x))


def exact_p_value_from_statistic(space, f: TestStatistic, x: str) -> Fraction:
    """P[f <= f(x)]."""
    i = space.index(x)
    nums, _ = f.scaled(space.ids)
    masses, mden = space.scaled_masses
    return Fraction(kernels.tail_mass(nums, masses, nums[i]), mden)


def classify_p_function(space, f: TestStatistic) -> PFunctionClassification:
    """Decide whether P[f <= eps] <= eps for all eps >= 0, and exactness.

    Only eps = 0 and the non-negative values of ``f`` need checking: between
    two consecutive values the tail is constant while eps grows.
    """
    nums, vden = f.scaled(space.ids)
    masses, mden = space.scaled_masses
    code, eps_num, tail_num = kernels.classify(nums, vden, masses, mden)
    kind = _KINDS[code]
    if kind is PKind.EXACT:
        return PFunctionClassification(kind)
    return PFunctionClassification(kind, Witness(Fraction(eps_num, vden), Fraction(tail_num, mden)))


def is_p_function(space, f: TestStatistic) -> bool:
    nums, vden = f.scaled(space.ids)
    masses, mden = space.scaled_masses
    return kernels.classify(nums, vden, masses, mden)[0] != kernels.NOT_P_FUNCTION


def scale_statistic(f: TestStatistic, c) -> TestStatistic:
    c = parse_rational(c)
    if c <= 0:
        raise NonPositiveScale(f"scale must be positive, got {c}")
    return TestStatistic({x: c * v for x, v in f.items()})


def bonferroni(space, statistics) -> TestStatistic:
    """n * min(f_1, ..., f_n), pointwise."""
    statistics = list(statistics)
    if not statistics:
        raise EmptyStatisticList("Bonferroni needs at least one statistic")
    ids = space.ids
    scaled = [f.scaled(ids) for f in statistics]
    dens = {d for _, d in scaled}
    if len(dens) == 1:
        den, = dens
        vectors = [nums for nums, _ in scaled]
    else:
        den = lcm(*dens)
        vectors = [[n * (den // d) for n in nums] for nums, d in scaled]
    return TestStatistic._from_scaled(ids, kernels.scaled_min(vectors, len(vectors)), den)
