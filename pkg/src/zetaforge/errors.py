"""Typed error taxonomy shared by every module.

Every raise site tags the message with ``module.operation`` so a failure
names the code that produced it; the CLI maps these classes onto exit
statuses (numerical failure vs. validation failure).
"""

from __future__ import annotations


class ZetaforgeError(Exception):
    """Base class for all errors raised by this package."""

    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"{where}: {message}")


class DomainError(ZetaforgeError):
    """An argument lies outside an operation's documented domain."""


class PoleError(ZetaforgeError):
    """Evaluation was requested at or next to a pole."""


class SingularDenominatorError(ZetaforgeError):
    """A series denominator is inside its guard band around zero."""


class NonConvergenceError(ZetaforgeError):
    """An accelerated evaluation could not reach the requested tolerance."""


class NonFiniteError(ZetaforgeError):
    """A computation produced NaN or infinity, which is never a value."""


class SelfCheckError(ZetaforgeError):
    """An internal consistency check failed (e.g. rotated value not real)."""


class CompletenessError(ZetaforgeError):
    """A zero scan found a count incompatible with the counting formula."""


class InsufficientSampleError(ZetaforgeError):
    """A statistic was requested over too small a sample."""


class CacheError(ZetaforgeError):
    """A zero-cache file is malformed or fails residual re-validation."""
