"""Exception types shared across the package."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Raised when a graph6 word cannot be decoded.

    ``offset`` is the byte position of the first offending byte.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(ValueError):
    """Raised when a graph is too large for the requested operation."""


class WorkLimitExceeded(RuntimeError):
    """Raised when an exhaustive enumeration hits its configured work limit.

    ``examined`` counts the enumeration nodes visited before giving up.
    """

    def __init__(self, message: str, examined: int):
        super().__init__(f"{message} ({examined} subsets examined)")
        self.examined = examined
