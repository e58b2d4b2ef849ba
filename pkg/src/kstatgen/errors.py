"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands disagree on variable count or symbol family."""


class PoleError(ZeroDivisionError):
    """A coefficient was evaluated at a root of its denominator.

    Raised when a formula is instantiated at a sample size that makes a
    falling-factorial denominator vanish, i.e. the sample is too small for
    the requested estimator order.
    """

    def __init__(self, message, min_valid_n=None):
        super().__init__(message)
        self.min_valid_n = min_valid_n


class ResourceLimitError(RuntimeError):
    """An enumeration or expansion would exceed the configured size caps."""


class CostWarning(UserWarning):
    """The requested order is beyond the comfortable range; expect a long run."""
