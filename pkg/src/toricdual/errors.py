"""Exception types shared across the package."""


class ToricDualError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(ToricDualError, ValueError):
    pass


class EmptyConfiguration(ConfigurationError):
    pass


class DimensionMismatch(ConfigurationError):
    pass


class DuplicatePoint(ConfigurationError):
    def __init__(self, first: int, second: int):
        super().__init__(f"points {first} and {second} coincide")
        self.indices = (first, second)


class ParseError(ConfigurationError):
    pass


class EmptyKernel(ToricDualError, ValueError):
    """The jet matrix has trivial kernel (c_k = 0)."""


class ZeroBVector(ToricDualError, ValueError):
    def __init__(self, index: int):
        super().__init__(f"b-vector {index} is zero; configuration is not knap")
        self.index = index


class Inapplicable(ToricDualError, ValueError):
    pass


class NotAPartition(ToricDualError, ValueError):
    pass


class TooLarge(ToricDualError, ValueError):
    pass


class BudgetExhausted(ToricDualError, RuntimeError):
    pass


class UnknownFixture(ToricDualError, KeyError):
    pass


class ParentNotSelfdual(ToricDualError, ValueError):
    pass


class NormalizationWarning(UserWarning):
    """Emitted when a configuration is silently moved to its own lattice."""
