"""Exception types shared across the package."""

from __future__ import annotations


class YmmstError(ValueError):
    """Base class for input and validation errors raised by this package."""


class InvalidPointSetError(YmmstError):
    """A rooted point set violates one of its invariants."""


class InvalidTreeError(YmmstError):
    """A tree structure, combinatorial or geometric, is malformed."""


class FormatError(YmmstError):
    """A file could not be parsed. Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class OracleLimitError(YmmstError):
    """The brute-force oracle refused an instance above its size cap."""


class NotAStarError(YmmstError):
    """Width certification requires a certified drawing of a star."""


class TranslatedChainError(RuntimeError):
    """The down-translated chain failed re-verification.

    This cannot happen for a certified star input; it means an internal
    invariant was broken and must be reported rather than swallowed.
    """
