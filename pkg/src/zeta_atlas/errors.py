"""Exception types shared across the package.

Operations signal failure; they never return sentinel values.  Errors that
carry partial numerical state expose it as attributes so callers (and the
check runner) can log how far an evaluation got.
"""

from __future__ import annotations


class ZetaAtlasError(Exception):
    """Base class for all package-specific errors."""


class DomainError(ZetaAtlasError):
    """Argument outside an operation's domain."""


class PoleError(ZetaAtlasError):
    """Evaluation exactly at a pole (e.g. zeta at s = 1)."""


class ConvergenceError(ZetaAtlasError):
    """Iteration budget exhausted before the tolerance was met.

    Carries the partial result (a SeriesEval) in ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class PrecisionLossError(ZetaAtlasError):
    """Estimated cancellation exceeds the requested tolerance.

    ``estimate`` is the absolute cancellation estimate that triggered the
    signal.
    """

    def __init__(self, message, estimate):
        super().__init__(message)
        self.estimate = estimate


class NonfiniteIntegrandError(ZetaAtlasError):
    """The integrand produced NaN/inf at an interior quadrature node."""


class UnknownFunctionError(ZetaAtlasError):
    """eval dispatch: no operation registered under that name."""


class ArityError(ZetaAtlasError):
    """eval dispatch: wrong number of arguments for the operation."""
