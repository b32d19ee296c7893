"""
Exception hierarchy for ArcMax

Every error carries the process exit code the CLI reports for it:
1 for domain errors, 2 for non-convergence.
"""

from typing import Optional


class ArcMaxError(Exception):
    """Base class for all ArcMax errors"""
    exit_code: int = 1


class DomainError(ArcMaxError, ValueError):
    """Argument outside the domain of an operation"""
    exit_code = 1


class SingularityError(DomainError):
    """Closed form evaluated where it diverges (θ = π/2)"""


class BracketError(DomainError):
    """Root bracket without a sign change"""


class NonConvergenceError(ArcMaxError, RuntimeError):
    """Iteration budget exhausted before the tolerance was met"""
    exit_code = 2


class SweepAborted(ArcMaxError):
    """A sweep row failed; carries the offending angle and the underlying error"""

    def __init__(self, theta: float, cause: Exception, message: Optional[str] = None):
        self.theta = theta
        self.cause = cause
        self.exit_code = getattr(cause, "exit_code", 1)
        super().__init__(message or f"Sweep aborted at theta={theta!r}: {cause}")
