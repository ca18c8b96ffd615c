"""Exception types shared across the package."""


class ParityError(ValueError):
    """A parameter that must be an odd positive integer was not."""

    def __init__(self, message: str = "parity error: parameters must be odd"):
        super().__init__(message)


class OrderMismatchError(ValueError):
    """Two series with different truncation orders were combined."""


class NonInvertibleSeriesError(ValueError):
    """Reciprocal requested for a series whose constant term is not a nonzero constant."""


class NonUnitError(ArithmeticError):
    """Inverse requested for a residue divisible by p."""


class PrecisionError(AssertionError):
    """Working precision was too low to cancel the p-power of k! exactly."""
