"""Exception hierarchy shared by all modules."""


class Susy8vError(Exception):
    """Base class for every error raised by the package."""


class DomainError(Susy8vError, ValueError):
    """Input outside the mathematical domain of an operation."""


class CapacityError(Susy8vError, ValueError):
    """Problem size above the configured bound."""


class PoleError(DomainError):
    """Evaluation at a pole."""


class ConditioningError(Susy8vError, ArithmeticError):
    """Near-singular determinant or prefactor; regroup or perturb arguments."""


class InternalConsistencyError(Susy8vError, AssertionError):
    """An exact division or cancellation that must succeed did not."""


class NullDimError(Susy8vError, ArithmeticError):
    """The eigenproblem solution space is not one-dimensional."""

    def __init__(self, message, singular_values=None):
        super().__init__(message)
        self.singular_values = singular_values


class ConvergenceError(Susy8vError, ArithmeticError):
    """Singular-value gap too small to isolate a null vector."""


class AnchorZeroError(Susy8vError, ArithmeticError):
    """The predicted anchor component vanishes, so no scale can be fixed."""
