# numeric_core_2026/errors.py
"""Exception hierarchy shared by every package of the lab.

All input problems are ``ValueError`` subclasses so callers that only care about
"bad input" can catch the builtin.
"""


class RitzBoundsError(ValueError):
    """Base class for invalid numeric input."""


class NonFiniteError(RitzBoundsError):
    pass


class NotHermitianError(RitzBoundsError):
    pass


class DimensionMismatchError(RitzBoundsError):
    pass


class EmptySubspaceError(RitzBoundsError):
    pass


class NotPSDError(RitzBoundsError):
    pass


class SpectrumRangeError(RitzBoundsError):
    """Spectrum outside [0, 1] beyond the clamp window."""


class NotAcuteError(RitzBoundsError):
    pass


class InfiniteTangentError(RitzBoundsError):
    pass


class NotInvariantError(RitzBoundsError):
    pass


class GapConditionError(RitzBoundsError):
    """Raised when a spectral-gap hypothesis fails; ``condition`` names which one."""

    def __init__(self, message: str, condition: str):
        super().__init__(message)
        self.condition = condition


class SingularBlockError(RitzBoundsError):
    pass


class MatrixFormatError(RitzBoundsError):
    pass
