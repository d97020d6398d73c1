"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class CapacityError(RuntimeError):
    """The request exceeds a configured size or step budget.

    The message names the limit so callers can enlarge it and retry.
    """
