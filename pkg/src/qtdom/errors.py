"""Exception types shared across the package."""


class QtdomError(ValueError):
    """Base class for all qtdom errors."""


class GraphFormatError(QtdomError):
    """Malformed graph6 / edge-list input, or a vertex count out of range."""


class UndefinedInvariantError(QtdomError):
    """Invariant requested on a graph where it is not defined
    (total domination on a disconnected graph or one with an isolated vertex)."""


class OperationError(QtdomError):
    """Construction precondition violated (o1/o2 target, QT attachment rules,
    size caps of the composite constructions, non-universal anchor, ...)."""
