"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """A permutation, basis or parameter violates an operation's precondition."""


class BudgetExceeded(RuntimeError):
    """A search touched more candidate nodes than its configured cap allows."""

    def __init__(self, message, nodes=None):
        super().__init__(message)
        self.nodes = nodes


class Discrepancy(RuntimeError):
    """A computed object failed a verification that the theory says must pass."""
