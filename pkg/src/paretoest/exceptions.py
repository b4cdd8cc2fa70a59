"""Exception hierarchy shared across the package."""


class ParetoError(ValueError):
    """Base class for every error raised by :mod:`paretoest`."""


class DomainError(ParetoError):
    """An argument lies outside the domain of the operation."""


class DegenerateSampleError(ParetoError):
    """All observations equal the scale ``k`` so ``sum(log(x/k)) == 0``."""


class InsufficientSampleError(ParetoError):
    """The estimator needs more observations than were supplied."""


class MomentDoesNotExistError(ParetoError):
    """The requested moment diverges for this sample size."""


class QuadratureAccuracyError(ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance.

    The best available estimate is kept on the exception so callers can
    decide whether to use it anyway.
    """

    def __init__(self, message, estimate=float("nan"), error=float("inf")):
        super().__init__(message)
        self.estimate = estimate
        self.error = error
