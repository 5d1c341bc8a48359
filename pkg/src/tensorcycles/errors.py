"""Exception types shared across the package."""


class CycleDecompositionError(Exception):
    """Base class for all errors raised by this package."""


class InvalidFamily(CycleDecompositionError, ValueError):
    pass


class BadColumn(CycleDecompositionError, ValueError):
    pass


class BadCycle(CycleDecompositionError, ValueError):
    pass


class BadOrder(CycleDecompositionError, ValueError):
    """Parameters fall outside the range a construction or decider covers."""


class NotApplicable(CycleDecompositionError, ValueError):
    """A constructor was called with parameters it does not cover."""


class NotDecomposable(CycleDecompositionError):
    pass


class MissingPieceConstructor(CycleDecompositionError, KeyError):
    pass


class BudgetExceeded(CycleDecompositionError):
    pass


class VerificationFailed(CycleDecompositionError):
    """A construction produced output that does not verify. Always a bug."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate
