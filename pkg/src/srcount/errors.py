class InvalidInputError(ValueError):
    """Raised when an argument violates a documented precondition."""


class NotFoundError(LookupError):
    """Raised when a select asks for an occurrence that does not exist."""
