"""Exception types raised across the package."""

from __future__ import annotations


class IdealFlowError(Exception):
    """Base class for every error raised by this package."""


class ParseError(IdealFlowError):
    """A line of an input file could not be parsed."""

    def __init__(self, source, line_no, reason):
        super().__init__(f"{source}:{line_no}: {reason}")
        self.source = str(source)
        self.line_no = line_no
        self.reason = reason


class EmptyGraphError(IdealFlowError):
    """No nodes could be derived from the input."""


class SelfLoopError(IdealFlowError):
    def __init__(self, node):
        super().__init__(f"self-loop on node {node!r} is not allowed")
        self.node = node


class DuplicateEdgeError(IdealFlowError):
    def __init__(self, source, target):
        super().__init__(f"duplicate edge {source!r} -> {target!r}")
        self.source = source
        self.target = target


class UnknownNodeError(IdealFlowError):
    def __init__(self, node, context=""):
        msg = f"unknown node {node!r}"
        if context:
            msg = f"{msg} ({context})"
        super().__init__(msg)
        self.node = node


class DimensionMismatchError(IdealFlowError):
    def __init__(self, shape_a, shape_b):
        super().__init__(f"matrix shapes do not match: {shape_a} vs {shape_b}")
        self.shape_a = tuple(shape_a)
        self.shape_b = tuple(shape_b)


class NotSquareError(IdealFlowError):
    def __init__(self, shape):
        super().__init__(f"matrix is not square: shape {tuple(shape)}")
        self.shape = tuple(shape)


class NotStronglyConnectedError(IdealFlowError):
    def __init__(self, detail="graph is not strongly connected"):
        super().__init__(detail)


class SinkNodeError(IdealFlowError):
    def __init__(self, node):
        super().__init__(f"node {node!r} has no outgoing edge; random walk is undefined")
        self.node = node


class ZeroAgentsError(IdealFlowError):
    def __init__(self, agents):
        super().__init__(f"agent count must be >= 1, got {agents}")
        self.agents = agents


class ConvergenceFailureError(IdealFlowError):
    def __init__(self, residual):
        super().__init__(f"stationary solve did not converge: residual {residual:.3e}")
        self.residual = residual


class NotNormalizedError(IdealFlowError):
    """A probability vector is negative somewhere or does not sum to one."""


class AllZeroError(IdealFlowError):
    def __init__(self, detail="matrix has no nonzero entry"):
        super().__init__(detail)


class TrajectoryError(IdealFlowError):
    """Base class for per-trajectory validation failures."""

    trajectory_id: int | None = None


class TooShortError(TrajectoryError):
    def __init__(self, trajectory_id, length):
        super().__init__(
            f"trajectory {trajectory_id} has {length} node(s); at least 2 are required"
        )
        self.trajectory_id = trajectory_id
        self.length = length


class NonEdgeStepError(TrajectoryError):
    def __init__(self, source, target, trajectory_id):
        super().__init__(
            f"trajectory {trajectory_id} steps {source!r} -> {target!r}, "
            "which is not an edge of the graph"
        )
        self.source = source
        self.target = target
        self.trajectory_id = trajectory_id


class DuplicateIdError(TrajectoryError):
    def __init__(self, trajectory_id):
        super().__init__(f"duplicate trajectory id {trajectory_id}")
        self.trajectory_id = trajectory_id


class TrajectoryValidationError(IdealFlowError):
    """Aggregate of every invalid trajectory found while loading a file."""

    def __init__(self, errors):
        self.errors = list(errors)
        lines = "; ".join(str(e) for e in self.errors)
        super().__init__(f"{len(self.errors)} invalid trajectory line(s): {lines}")
