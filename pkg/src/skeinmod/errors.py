"""Error types shared across the package.

ParseError covers malformed text, documents, and bad names or parameters.
DimensionError covers vectors, matrices, or indices of the wrong size.
The CLI maps them to distinct exit codes, so library code must keep the
two categories apart.
"""

from __future__ import annotations

__all__ = ["SkeinModError", "ParseError", "DimensionError"]


class SkeinModError(Exception):
    """Base class for all errors raised by skeinmod."""


class ParseError(SkeinModError):
    """Unreadable or schema-violating input (text, JSON, names, parameters)."""


class DimensionError(SkeinModError):
    """A vector, matrix, or index does not match the expected dimensions."""
