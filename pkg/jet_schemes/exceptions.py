"""
Exception types shared across the jet scheme toolkit.
"""

from __future__ import annotations

from typing import Any, Optional


class JetSchemeError(Exception):
    """Base class for all errors raised by this package."""


class TruncationMismatchError(JetSchemeError, ValueError):
    """Two truncated series with different windows were combined."""

    def __init__(self, left: tuple, right: tuple):
        super().__init__(f"Truncation mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class ResourceCapExceeded(JetSchemeError):
    """A computation outgrew one of the configured resource caps."""

    def __init__(self, cap: str, limit: int, requested: Optional[int] = None):
        detail = f" (requested {requested})" if requested is not None else ""
        super().__init__(f"Resource cap {cap}={limit} exceeded{detail}")
        self.cap = cap
        self.limit = limit
        self.requested = requested


class VerificationMismatch(JetSchemeError):
    """Two independent computations disagree."""

    def __init__(self, what: str, location: Any = None, expected: Any = None, actual: Any = None):
        message = what
        if location is not None:
            message += f" at {location}: expected {expected}, got {actual}"
        super().__init__(message)
        self.what = what
        self.location = location
        self.expected = expected
        self.actual = actual


__all__ = [
    "JetSchemeError",
    "TruncationMismatchError",
    "ResourceCapExceeded",
    "VerificationMismatch",
]
