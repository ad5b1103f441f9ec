"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Raised for malformed edge-list input; message names the bad line."""


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed its configured budget."""

    def __init__(self, message, attempted=None, budget=None):
        super().__init__(message)
        self.attempted = attempted
        self.budget = budget
