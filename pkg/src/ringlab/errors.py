"""Exception hierarchy.  Every error carries a short machine-readable code and
the CLI exit status it maps to."""

from __future__ import annotations


class RingLabError(Exception):
    code = "error"
    exit_status = 2

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict:
        out = {"code": self.code, "message": self.message}
        out.update({k: v for k, v in self.details.items() if v is not None})
        return out


class ResourceCapExceeded(RingLabError):
    code = "resource-cap"
    exit_status = 3


class ConstructionError(RingLabError):
    """A constructor precondition failed (non-central s, bad bimodule, ...)."""
    code = "construction"


class NotAnIdealError(ConstructionError):
    code = "not-ideal"


class NotIdempotentError(ConstructionError):
    code = "not-idempotent"


class RingMismatchError(RingLabError):
    code = "ring-mismatch"


class EngineBugError(RingLabError):
    """Two independent routes to the same quantity disagreed."""
    code = "engine-bug"
    exit_status = 1


class ParseError(RingLabError):
    code = "syntax"

    def __init__(self, message: str, *, line: int | None = None,
                 column: int | None = None, code: str | None = None):
        if code is not None:
            self.code = code
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(message + where, line=line, column=column)
        self.line = line
        self.column = column
