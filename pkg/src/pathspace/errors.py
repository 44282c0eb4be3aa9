"""Exception hierarchy shared by all pathspace modules."""

from typing import Any, Optional


class PathspaceError(Exception):
    """Base class for every error raised by pathspace."""


class DomainError(PathspaceError, ValueError):
    """An argument lies outside the domain of an operation (bad time, delta, horizon, dim...)."""


class OracleRefusedError(DomainError):
    """A brute-force oracle refused an instance that would blow up combinatorially."""


class FitBudgetExhausted(PathspaceError):
    """
    The adaptive fitter reached its support budget without meeting the target.
    Carries the best candidate seen so callers can still use (and flag) it.
    """

    def __init__(
        self,
        message: str,
        *,
        best_estimate: float,
        best_margin: float,
        member: Optional[Any] = None,
    ):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.best_margin = best_margin
        self.member = member


class ReportError(PathspaceError):
    """A report could not be emitted (empty report or io failure)."""

    def __init__(self, message: str, path: Optional[str] = None):
        super().__init__(f"{message} ({path})" if path else message)
        self.path = path
