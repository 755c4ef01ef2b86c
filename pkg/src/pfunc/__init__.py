"""Exact p-values over finite probability trials.

Test orders, test pyramids and test statistics with the maps between them,
canonic versions, p-function classification and the Bonferroni correction,
all in exact rational arithmetic.
"""

from .errors import PFuncError
from .kernels import BACKEND
from .pfunctions import (
    PFunctionClassification,
    PKind,
    Witness,
    bonferroni,
    classify_p_function,
    exact_p_value,
    exact_p_value_from_statistic,
    is_p_function,
    scale_statistic,
    tail_probability,
)
from .tools import (
    TestOrder,
    TestPyramid,
    TestStatistic,
    canonic_version_of_pyramid,
    canonic_version_of_statistic,
    downward_closure,
    induce_order_from_pyramid,
    induce_order_from_statistic,
    induce_pyramid_from_order,
    induce_statistic_from_order,
    is_canonic_pyramid,
    is_canonic_statistic,
    is_downward_closed,
    orders_equal,
    pyramids_equivalent,
    statistics_equivalent,
)
from .trial import (
    AggregatedTrial,
    Trial,
    event_probability,
    expand_aggregated,
    rank_events_by_impugning_power,
    validate_trial,
)
from .worked_examples import (
    LotterySpec,
    Participant,
    SnoopingReport,
    coin_min_statistic,
    coin_p_value,
    coin_trial,
    lottery_distance_statistic,
    lottery_p_value,
    lottery_trial,
    snooping_simulation,
)

__version__ = "0.1.0"
