"""Exception types shared across the package.

Each maps to a stable CLI exit code (see cli.EXIT_CODES); library users catch
them directly.
"""

from __future__ import annotations


class ZetaAlphaError(Exception):
    """Base class for all package-specific errors."""


class NotDivisible(ZetaAlphaError):
    """Synthetic division left a nonzero remainder."""


class IndexOutOfTable(ZetaAlphaError):
    """A coefficient table was asked for an index beyond its max_k."""


class PrecisionTooLow(ZetaAlphaError):
    """Requested working precision is below the supported minimum."""


class PreconditionViolated(ZetaAlphaError):
    """An input is outside the documented domain of an operation."""


class PoleAt(ZetaAlphaError):
    """Evaluation was requested at (or too close to) a pole.

    ``point`` records the offending value as a string; for per-term poles the
    term index is included in the message.
    """

    def __init__(self, point, message: str | None = None):
        self.point = point
        super().__init__(message or f"evaluation at or too close to a pole: {point}")


class BudgetExceeded(ZetaAlphaError):
    """The certified error target was not reached within the term budget."""

    def __init__(self, message: str, best_bound=None, terms: int | None = None):
        self.best_bound = best_bound
        self.terms = terms
        super().__init__(message)


class CacheFormatError(ZetaAlphaError):
    """Cache file has a wrong version, bad structure, or failed its checksum."""
