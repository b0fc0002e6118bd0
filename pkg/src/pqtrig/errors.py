"""Exception types shared across the package."""


class PQTrigError(Exception):
    """Base class for all pqtrig errors."""


class DomainError(PQTrigError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ComputationError(PQTrigError, RuntimeError):
    """A numerical procedure failed to reach its accuracy target.

    The best available estimate, when one exists, is attached as
    ``partial``.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
