"""Exception types shared across the package."""


class RefinementBudgetError(Exception):
    """A representation cannot supply enough bits within its precision cap."""


class InvariantError(Exception):
    """An internal consistency check failed (a bug, not a user error)."""
