"""Exception hierarchy.

Every domain error derives from :class:`PFuncError`; the class name doubles as
the machine-readable error name reported by the CLI.
"""


class PFuncError(ValueError):
    """Base class for all domain errors."""


class MalformedInput(PFuncError):
    """Input could not be parsed into the expected shape."""


# trials and events
class EmptySpace(PFuncError):
    pass


class DuplicateOutcomeId(PFuncError):
    pass


class NonPositiveProbability(PFuncError):
    pass


class NonPositiveClassSize(PFuncError):
    pass


class ProbabilitySumNotOne(PFuncError):
    def __init__(self, total):
        self.total = total
        super().__init__(f"probabilities sum to {total}, not 1")


class UnknownMember(PFuncError):
    pass


class EmptyEventInInput(PFuncError):
    pass


class TooLargeToExpand(PFuncError):
    pass


# test tools
class InvalidOrder(PFuncError):
    pass


class InvalidPyramid(PFuncError):
    pass


class UnknownOutcome(PFuncError):
    pass


class MemberOutsideOmega(PFuncError):
    pass


class OrderTrialMismatch(PFuncError):
    pass


class MissingStatisticValue(PFuncError):
    pass


# p-functions
class NegativeEpsilon(PFuncError):
    pass


class NonPositiveScale(PFuncError):
    pass


class EmptyStatisticList(PFuncError):
    pass


# worked examples
class OutOfRange(PFuncError):
    pass


class NoTicketsSold(PFuncError):
    pass


class InvalidLotterySpec(PFuncError):
    pass
