"""Exception types shared across the package."""


class SactError(Exception):
    """Base class for all package errors."""


class ParseError(SactError):
    """Malformed text input (permutations, data sets, signatures)."""


class MembershipError(SactError):
    """An element does not belong to the group it was used with."""


class DegreeCapExceeded(SactError):
    """An exhaustive operation was requested above the configured degree cap."""


class KindMismatch(SactError):
    """Two data sets of different kinds were compared."""


class GenusMismatch(SactError):
    """Two cyclic data sets of different genus were paired."""


class PeriodNotRealizable(SactError):
    """A signature period is not an element order of the chosen group."""


class NotIndexTwo(SactError):
    """The requested subgroup is not the canonical index-2 subgroup."""


class NotApplicable(SactError):
    """A shortcut was invoked outside its preconditions."""


class NonIntegralError(SactError):
    """An exact rational that must be an integer is not; input is inconsistent."""


class NegativeMultiplicityError(SactError):
    """A cone multiplicity came out negative; input is inconsistent."""


class ValidationFailure(SactError):
    """A data set violates one of its defining conditions.

    `condition` names the violated clause, e.g. "divisibility", "lcm",
    "congruence", "integrality", "order-mismatch", "product", "generation",
    "parity", "witness".
    """

    def __init__(self, condition: str, message: str = ""):
        self.condition = condition
        super().__init__(f"{condition}: {message}" if message else condition)


class BudgetExhausted(SactError):
    """A search hit its node or wall-clock ceiling.

    `partial` holds whatever results were collected before the ceiling;
    `complete` is always False and is kept for symmetry with result records.
    """

    def __init__(self, message: str = "search budget exhausted", partial=None):
        self.partial = partial
        self.complete = False
        super().__init__(message)
