"""Exceptions raised by anytime_cs."""

from typing import Optional

from pydantic import ValidationError


class AnytimeCsError(Exception):
    """Base class for all library errors."""


class DataContractError(AnytimeCsError, ValueError):
    """An observation or record violates the data contract (e.g. x outside [0, 1])."""


class SchemaError(AnytimeCsError, ValueError):
    """A CSV file does not match the expected schema."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyTableError(AnytimeCsError, ValueError):
    """A chart was requested for a table without data."""


def first_line(exc: BaseException) -> str:
    """A one-line description of an exception; pydantic errors report their first field."""
    if isinstance(exc, ValidationError):
        err = exc.errors()[0]
        where = ".".join(str(part) for part in err["loc"])
        return f"{where}: {err['msg']}" if where else err["msg"]
    lines = str(exc).strip().splitlines()
    return lines[0] if lines else type(exc).__name__
