"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an argument or an input file violates a documented contract."""


class BudgetExceededError(RuntimeError):
    """Raised when an exact search exceeds its candidate budget.

    The search never degrades to an approximation: running out of budget is
    an explicit resource error, not a wrong answer.
    """
