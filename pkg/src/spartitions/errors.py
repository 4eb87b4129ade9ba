"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the supported domain of an operation."""


class PoleError(ValueError):
    """A special function was evaluated at one of its poles."""


class AccuracyError(ArithmeticError):
    """A numerical routine could not meet the requested tolerance.

    The best available estimate, when one exists, is attached as ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
