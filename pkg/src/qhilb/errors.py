"""Exceptions shared across modules."""


class BudgetExceeded(RuntimeError):
    """An exhaustive computation would exceed its configured size limit."""
