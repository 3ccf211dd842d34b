class DomrelError(Exception):
    """Base class for errors raised by this package."""


class ParseError(DomrelError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StructuralError(DomrelError, ValueError):
    """A graph violates the structural precondition of an operation."""


class ParameterError(DomrelError, ValueError):
    pass


class SizeError(DomrelError, ValueError):
    """Input exceeds a capacity limit."""
