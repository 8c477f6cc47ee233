class DomainError(ValueError):
    """Argument outside the range where a count is defined."""


class ConsistencyError(ArithmeticError):
    """An exactness check failed; this indicates a bug, not bad input."""
