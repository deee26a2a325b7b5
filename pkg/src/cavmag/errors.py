"""Exception types shared across the package."""

from __future__ import annotations


class CavmagError(Exception):
    """Base class for domain errors raised by this package."""


class UnphysicalStateError(CavmagError, ValueError):
    """Covariance matrix violates the Heisenberg uncertainty bound."""


class NumericalFailureError(CavmagError, RuntimeError):
    """A numerical routine produced an internally inconsistent result.

    Raised when two independent computation routes disagree beyond
    tolerance, or when an eigen-solve returns values that should be real
    but are not. This is always a bug or a pathological input, never an
    expected runtime condition.
    """


class UnstableSystemError(CavmagError, RuntimeError):
    """Drift matrix admits no steady state (an eigenvalue real part >= 0).

    Carries the offending stability report in ``report``.
    """

    def __init__(self, report, message: str | None = None):
        self.report = report
        if message is None:
            message = (
                "drift matrix is not strictly stable "
                f"(max eigenvalue real part {report.max_real_part:.6g})"
            )
        super().__init__(message)


class NearSingularError(CavmagError, RuntimeError):
    """Steady-state linear system is too ill-conditioned to trust."""


class NoEntanglementError(CavmagError, RuntimeError):
    """A threshold search was started from a point with no entanglement."""
