"""Exception types shared across the library."""


class SpinThetaError(Exception):
    """Base class for all library errors."""


class NonPositiveDefinite(SpinThetaError):
    """The imaginary part of a period matrix is not positive definite."""


class DimensionMismatch(SpinThetaError):
    """Vector or matrix sizes do not agree with the genus."""


class OrderTooHigh(SpinThetaError):
    """A derivative of order > 4 was requested."""


class ThetaNull(SpinThetaError):
    """theta(0) vanishes, so the normalized kernel is undefined."""


class NotFound(SpinThetaError):
    """An iterative search failed to converge."""


class GenusTooSmall(SpinThetaError):
    """The requested genus is below the supported range."""


class IndexOutOfRange(SpinThetaError):
    """A boundary index i is outside its admissible range."""


class GenusMismatch(SpinThetaError):
    """Two objects built for different genera were combined."""


class InconsistentSystem(SpinThetaError):
    """The test-curve equations contradict each other."""
