"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class AccuracyError(ArithmeticError):
    """A numeric routine could not meet its accuracy budget.

    Carries the best available estimate so callers can degrade gracefully.
    """

    def __init__(self, message, best_estimate=None, abs_err=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.abs_err = abs_err


class MembershipError(ValueError):
    """A matrix does not belong to the group required by an algorithm."""


class LiftInconsistencyError(ArithmeticError):
    """A lift linear system has residual above tolerance.

    Carries the solution record for inspection.
    """

    def __init__(self, message, solution=None):
        super().__init__(message)
        self.solution = solution
