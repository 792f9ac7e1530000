"""Exception types raised by the library."""


class GraphError(Exception):
    """Base class for all library errors."""


class InvalidVertex(GraphError):
    pass


class LoopRejected(GraphError):
    pass


class InvalidParameter(GraphError):
    pass


class TooLarge(GraphError):
    pass


class TooSmall(GraphError):
    pass


class NotConnected(GraphError):
    pass


class BudgetExceeded(GraphError):
    pass


class NotRealizable(GraphError):
    pass


class FormatError(GraphError):
    """Malformed graph6 or edge-list input; ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
