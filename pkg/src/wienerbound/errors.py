"""Exception types shared across the package."""


class DisconnectedGraphError(ValueError):
    """Raised when a distance computation meets an unreachable vertex."""


class NotApplicableError(ValueError):
    """Raised when an operation's hypothesis is not met (e.g. diameter < 2)."""


class Graph6ParseError(ValueError):
    """Raised on malformed graph6 input."""
