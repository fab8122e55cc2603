"""Exception hierarchy shared by all olhgen modules."""


class OlhgenError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(OlhgenError, ValueError):
    """An argument violates a documented precondition."""


class UnsupportedOrderError(OlhgenError):
    """Requested matrix order is outside the supported generator set."""


class NotInCatalogError(OlhgenError, KeyError):
    """No embedded design is available for the requested run size."""


class NoOlhExistsError(OlhgenError):
    """An orthogonal Latin hypercube of this run size cannot exist (n = 4k+2, or n < 4)."""


class ConditionViolationError(OlhgenError):
    """A construction hypothesis failed; ``clause`` names the violated condition."""

    def __init__(self, clause: str, message: str):
        self.clause = clause
        super().__init__(f"condition ({clause}): {message}")


class BudgetExceededError(OlhgenError):
    """An exhaustive enumeration would exceed its stated budget."""


class DegenerateColumnError(OlhgenError):
    """A column is constant (zero vector in centered levels), so correlation is undefined."""


class ParseError(OlhgenError):
    """An input file could not be parsed; carries line/column diagnostics."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
