"""Exception types shared across the package."""


class SplinecombError(Exception):
    """Base class for all library-specific errors."""


class DuplicateNode(SplinecombError):
    """Two interpolation abscissae coincide."""


class IndexOutOfSupport(SplinecombError):
    """Requested a spline piece outside the support of the spline."""


class NonIntegerResult(SplinecombError):
    """An exact value that must be an integer came out as a proper fraction.

    Signals an implementation bug, never bad input.
    """


class NegativeResult(SplinecombError):
    """An alternating sum that must be non-negative came out negative.

    Signals an implementation bug, never bad input.
    """


class TooLarge(SplinecombError):
    """Requested enumeration exceeds the configured budget."""

    def __init__(self, message: str, bound: int | None = None):
        super().__init__(message)
        self.bound = bound
