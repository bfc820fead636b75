"""Custom exceptions shared by every qet-sim module."""

from __future__ import annotations


class QETError(Exception):
    """Base exception for qet-sim errors."""

    pass


class QETValidationError(QETError):
    """Input failed a precondition or a type invariant."""

    pass


class NumericFailureError(QETError):
    """A numerical routine could not produce a trustworthy result."""

    pass
