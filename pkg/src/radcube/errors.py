"""Exception types shared across the package."""

from __future__ import annotations


class RadcubeError(Exception):
    """Base class for all package-specific errors."""


class InputError(RadcubeError, ValueError):
    """Invalid user input: bad dimensions, mixed rings/moduli, bad flags."""


class ParseError(InputError):
    """Text input rejected; carries 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "") + ": "
        super().__init__(where + message)


class ConstructionRefused(RadcubeError):
    """A complex construction's precondition failed; message says which."""
