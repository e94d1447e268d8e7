"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class DimensionMismatch(ValueError):
    """Operand shapes or lengths are incompatible."""


class BudgetExceeded(ValueError):
    """An exhaustive enumeration would exceed its size budget."""


class InvalidDistribution(ValueError):
    """Weights are negative or do not sum to one."""
