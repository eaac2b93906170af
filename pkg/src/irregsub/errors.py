"""Exception hierarchy shared by every module of the package."""


class GraphError(Exception):
    """Base class for all package errors."""


class LoopEdge(GraphError, ValueError):
    def __init__(self, index):
        super().__init__(f"edge {index} is a loop")
        self.index = index


class VertexOutOfRange(GraphError, ValueError):
    def __init__(self, index):
        super().__init__(f"edge {index} has an endpoint out of range")
        self.index = index


class DeadEdge(GraphError, KeyError):
    def __init__(self, edge):
        super().__init__(f"edge {edge} is not live")
        self.edge = edge


class NotRegular(GraphError, ValueError):
    pass


class NotCubic(NotRegular):
    pass


class DegreeTooSmall(GraphError, ValueError):
    pass


class MalformedRecord(GraphError, ValueError):
    pass


class DimensionMismatch(GraphError, ValueError):
    pass


class WrongSide(GraphError, ValueError):
    def __init__(self, edge, msg=None):
        super().__init__(msg or f"edge {edge} is on the wrong side")
        self.edge = edge


class IndexOutOfRange(GraphError, ValueError):
    pass


class PreconditionViolated(GraphError, ValueError):
    pass


class InternalInvariant(GraphError, AssertionError):
    """A guarantee of the underlying theory failed: always an implementation bug."""


class TooSmall(GraphError, ValueError):
    pass


class NotConnectedCubic(GraphError, ValueError):
    pass


class NotProper(GraphError, ValueError):
    pass


class WrongState(GraphError, ValueError):
    pass


class TooLarge(GraphError, ValueError):
    pass


class InvalidParams(GraphError, ValueError):
    pass


class RetryExhausted(GraphError, RuntimeError):
    pass


class HostMismatch(GraphError, ValueError):
    pass


class ParseError(GraphError, ValueError):
    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class InconsistentHeader(ParseError):
    pass
