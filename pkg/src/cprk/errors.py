"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class CprError(Exception):
    """Base class for every error raised by :mod:`cprk`."""


class InvalidInputError(CprError, ValueError):
    """Arguments outside the documented domain of an operation."""


class InvalidProfileError(InvalidInputError):
    """An arc profile whose occupancies do not add up to the graph it describes."""


class PreconditionError(InvalidInputError):
    """A formula was asked for outside the range where it is claimed to hold."""


class ResourceLimitError(CprError):
    """An exhaustive search would exceed its configured budget."""


class CountOverflowError(CprError, OverflowError):
    """A count no longer fits the fixed-width integers of the fast path."""


class GraphParseError(InvalidInputError):
    def __init__(self, message: str, lineno: int | None = None) -> None:
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
