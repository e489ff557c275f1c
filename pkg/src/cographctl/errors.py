"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed textual input. Carries 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)
        self.line = line
        self.col = col


class NotConnectedError(ValueError):
    """Operation requires a connected graph."""


class SizeCapError(ValueError):
    """Input exceeds the size cap of an exhaustive-search routine."""


class NonIntegerRootError(ArithmeticError):
    """A polynomial expected to split over the integers does not."""
