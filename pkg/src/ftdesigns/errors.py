"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed a configured size bound."""


class ParseError(ValueError):
    """Raised on malformed catalog or design text; carries a line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DesignError(ValueError):
    """Raised when an incidence structure fails a 2-design axiom.

    The offending blocks, points, or point pair are kept on the exception
    so negative tests can assert on the witness.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConstructionError(RuntimeError):
    """Raised when a construction's internal consistency check fails."""
