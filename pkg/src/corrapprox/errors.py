"""Exception hierarchy shared by all modules."""


class CorrApproxError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(CorrApproxError, ValueError):
    """Input does not satisfy a documented precondition."""


class RankError(ValidationError):
    """Requested rank is outside the admissible range for the input."""


class DegenerateError(ValidationError):
    """A vector, axis or weight row is zero where a nonzero one is required."""


class ConvergenceError(CorrApproxError, RuntimeError):
    """An iterative procedure hit its iteration cap.

    The last iterate is kept on ``last`` so callers can inspect it.
    """

    def __init__(self, message, last=None):
        super().__init__(message)
        self.last = last


class SymmetrizationError(CorrApproxError, ArithmeticError):
    """A retained eigenvalue of the symmetrized product is negative."""
