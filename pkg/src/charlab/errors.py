"""Exception types shared across the package."""


class CharlabError(Exception):
    """Base class for all package-specific errors."""


class DegreeMismatchError(CharlabError, ValueError):
    """Permutations acting on different point sets were combined."""


class NotASubgroupError(CharlabError, ValueError):
    """An argument that must be a subgroup (or subset) of another group is not."""


class BudgetExceededError(CharlabError, RuntimeError):
    """A computation would exceed the configured desk-scale budget."""


class SchemaError(CharlabError, ValueError):
    """A table file violates the expected schema or fails verification."""


class SplittingError(CharlabError, RuntimeError):
    """Internal failure while splitting eigenspaces of class matrices."""
