"""Exception hierarchy shared by every module of the package."""


class TomographyError(Exception):
    """Base class for all errors raised by tomobound."""


class InvalidSums(TomographyError, ValueError):
    """Line sums that cannot be accepted as input."""


class NotMonotone(InvalidSums):
    pass


class OutOfRange(InvalidSums):
    pass


class SumMismatch(InvalidSums):
    pass


class Inconsistent(TomographyError):
    """No binary image has the requested line sums."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionViolated(TomographyError):
    pass


class MalformedProfile(TomographyError):
    pass


class InternalInvariantViolation(TomographyError, AssertionError):
    pass


class NotPadded(TomographyError, ValueError):
    pass


class BadParameter(TomographyError, ValueError):
    pass


class NoSolution(TomographyError):
    pass


class BudgetExceeded(TomographyError):
    """The oracle stopped before finishing; ``partial`` holds what it found."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class InstanceTooLarge(BudgetExceeded):
    pass
