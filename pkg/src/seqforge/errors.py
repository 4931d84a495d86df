"""Exception types shared across seqforge."""


class DomainError(ValueError):
    """Input outside the domain of an operation (bad length, alphabet, prime, ...)."""


class ConventionError(DomainError):
    """No sign/index convention satisfies the requested property.

    Raised when a quartic system with the requested (x, y) normalization cannot be
    reached, or when a sequence pair family cannot be pinned down by its spectrum.
    """

    def __init__(self, message, tried=None):
        super().__init__(message)
        self.tried = list(tried or [])


class InvariantError(RuntimeError):
    """An internal arithmetic invariant failed. Always a bug, never bad input."""
