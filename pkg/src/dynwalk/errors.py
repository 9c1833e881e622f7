"""Exception hierarchy shared by every module."""

from __future__ import annotations


class DynWalkError(Exception):
    """Base class for all errors raised by dynwalk."""


class GraphError(DynWalkError, ValueError):
    """An H-colored multigraph failed validation."""


class LoopEdge(GraphError):
    pass


class UnknownColor(GraphError):
    pass


class DuplicateEdgeId(GraphError):
    pass


class DanglingEndpoint(GraphError):
    pass


class UnknownId(DynWalkError, KeyError):
    def __str__(self) -> str:
        # KeyError quotes its argument; keep messages readable
        return str(self.args[0]) if self.args else ""


class UnknownVertex(UnknownId):
    pass


class UnknownEdge(UnknownId):
    pass


class SameVertex(DynWalkError, ValueError):
    pass


class MalformedWalk(DynWalkError, ValueError):
    pass


class NotMultipartite(DynWalkError):
    """An auxiliary graph is not complete multipartite; ``witness`` holds the triple."""

    def __init__(self, message: str, witness: tuple[str, str, str] | None = None):
        super().__init__(message)
        self.witness = witness


class PreconditionFailed(DynWalkError):
    """A construction was called on an input that violates its premises.

    ``witness`` carries the offending object (a vertex, a vertex pair, a walk
    index, ...) so callers can report it.
    """

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


class NotAPath(PreconditionFailed):
    pass


class NotACycle(PreconditionFailed):
    pass


class InternalProofViolation(DynWalkError):
    """A construction failed although its premises hold. Always a bug."""


class GenerationFailed(DynWalkError):
    pass


class BadParameters(DynWalkError, ValueError):
    pass


class BoundsExceeded(DynWalkError):
    pass
