"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph, vertex set, or parameters."""


class ParseError(GraphError):
    """Malformed edge-list or JSON input.

    ``line`` is the 1-based line number of the offending line, when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PartitionError(GraphError):
    """A connected partition is structurally invalid."""


class DecompositionError(GraphError):
    """Raised by colouring front-ends when a decomposition produced a minor
    certificate instead of a partition. The certificate is kept on
    ``model``."""

    def __init__(self, message: str, model=None):
        self.model = model
        super().__init__(message)


class BoundViolation(RuntimeError):
    """A bound guaranteed by construction was found violated.

    This always indicates a bug (or an input outside the hypothesis of the
    construction), never a recoverable condition.
    """


class OracleLimitError(GraphError):
    """Input too large for an exponential-time oracle."""
