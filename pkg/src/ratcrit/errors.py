"""Exception types raised across the package."""


class RatcritError(Exception):
    """Base class for all library errors."""


class DuplicateLocationError(RatcritError, ValueError):
    def __init__(self, location):
        self.location = location
        super().__init__(
            f"duplicate zero/pole location ({location.real!r}, {location.imag!r})"
        )


class ZeroMultiplicityError(RatcritError, ValueError):
    pass


class NonFiniteError(RatcritError, ValueError):
    pass


class PreconditionError(RatcritError, ValueError):
    pass


class EmptyFunctionError(RatcritError, ValueError):
    pass


class PoleEvaluationError(RatcritError, ValueError):
    pass


class ZeroPolynomialError(RatcritError, ValueError):
    pass


class NonConvergenceError(RatcritError, RuntimeError):
    """The root finder hit its iteration cap without a residual certificate.

    ``iterate`` holds the last approximations and ``residuals`` their scaled
    residuals, so callers can inspect how far off the run was.
    """

    def __init__(self, message, iterate=None, residuals=None):
        super().__init__(message)
        self.iterate = iterate
        self.residuals = residuals


class CircleTouchesPoleError(RatcritError, ValueError):
    pass


class UncertifiableMinimumError(RatcritError, RuntimeError):
    pass


class EpsilonTooLargeError(RatcritError, ValueError):
    pass


class ValidationError(RatcritError, ValueError):
    pass


class OverlappingCentersError(RatcritError, ValueError):
    pass


class SeparationError(RatcritError, RuntimeError):
    pass


class DocumentError(RatcritError, ValueError):
    """Malformed function document. ``position`` is a character offset or a
    field path such as ``points[2].mult``."""

    def __init__(self, message, position=None):
        self.position = position
        where = f" at {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
