"""Exception types shared across the package."""


class HomrepError(Exception):
    """Base class for package-specific errors."""


class GraphParseError(HomrepError):
    """Malformed edge-list or graph6 input."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DisconnectedGraphError(HomrepError):
    """An operation that requires a connected graph got a disconnected one."""


class CapacityError(HomrepError):
    """The automorphism group is larger than the configured cap."""
