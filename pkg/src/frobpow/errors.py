"""Exception types shared across the package.

The CLI maps these onto exit codes: parse errors exit 2, precondition
violations exit 3, resource-cap overruns exit 4.
"""

from __future__ import annotations


class FrobpowError(Exception):
    """Base class for all package-specific errors."""


class ParseError(FrobpowError):
    """Malformed input text (polynomial grammar or problem file)."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class PreconditionError(FrobpowError):
    """An operation was called outside its documented domain."""


class ArityMismatchError(PreconditionError):
    """Exponent vector length does not match the ring's variable count."""


class ExponentOverflowError(FrobpowError):
    """A monomial exponent left the supported 64-bit range."""


class ResourceCapError(FrobpowError):
    """A configurable safety bound was exceeded (enumeration, iteration, ...)."""
