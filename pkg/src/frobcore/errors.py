"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when an input is outside the mathematical domain of an operation."""
