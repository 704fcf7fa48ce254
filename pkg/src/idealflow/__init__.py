"""Structural matrices, trajectory analytics, and random-walk ideal flows."""

from .errors import (
    AllZeroError,
    ConvergenceFailureError,
    DimensionMismatchError,
    DuplicateEdgeError,
    DuplicateIdError,
    EmptyGraphError,
    IdealFlowError,
    NonEdgeStepError,
    NotNormalizedError,
    NotSquareError,
    NotStronglyConnectedError,
    ParseError,
    SelfLoopError,
    SinkNodeError,
    TooShortError,
    TrajectoryValidationError,
    UnknownNodeError,
    ZeroAgentsError,
)
from .graph import (
    DirectedGraph,
    StructureMatrices,
    adjacency_matrix,
    binarize,
    build_graph,
    external_matrix,
    load_graph,
    path_matrix,
    period,
    strongly_connected,
    structure_matrices,
)
from .trajectories import (
    SetMatrix,
    Trajectory,
    TrajectorySet,
    count_matrix,
    flow_set,
    indirect_set,
    load_trajectories,
    od_set,
    partition_indirect,
)
from .relations import (
    VerificationReport,
    hadamard,
    verify_flow_identities,
    verify_inequality,
    verify_premagic,
)
from .flow import (
    MIN_NORMALIZED,
    PROBABILITY_SCALED,
    FlowClassification,
    IdealFlowMatrix,
    PeriodicityWarning,
    classify_ideal_flow,
    entropy,
    graph_ideal_flow,
    ideal_flow,
    stationary_distribution,
    transition_from_adjacency,
)
from .simulate import (
    ConvergenceSeries,
    CountAggregate,
    SimConfig,
    SimResult,
    convergence_study,
    relative_flow,
    simulate,
)

__version__ = "0.1.0"

__all__ = [
    "AllZeroError",
    "ConvergenceFailureError",
    "ConvergenceSeries",
    "CountAggregate",
    "DimensionMismatchError",
    "DirectedGraph",
    "DuplicateEdgeError",
    "DuplicateIdError",
    "EmptyGraphError",
    "FlowClassification",
    "IdealFlowError",
    "IdealFlowMatrix",
    "MIN_NORMALIZED",
    "NonEdgeStepError",
    "NotNormalizedError",
    "NotSquareError",
    "NotStronglyConnectedError",
    "PROBABILITY_SCALED",
    "ParseError",
    "PeriodicityWarning",
    "SelfLoopError",
    "SetMatrix",
    "SimConfig",
    "SimResult",
    "SinkNodeError",
    "StructureMatrices",
    "TooShortError",
    "Trajectory",
    "TrajectorySet",
    "TrajectoryValidationError",
    "UnknownNodeError",
    "VerificationReport",
    "ZeroAgentsError",
    "adjacency_matrix",
    "binarize",
    "build_graph",
    "classify_ideal_flow",
    "convergence_study",
    "count_matrix",
    "entropy",
    "external_matrix",
    "flow_set",
    "graph_ideal_flow",
    "hadamard",
    "ideal_flow",
    "indirect_set",
    "load_graph",
    "load_trajectories",
    "od_set",
    "partition_indirect",
    "path_matrix",
    "period",
    "relative_flow",
    "simulate",
    "stationary_distribution",
    "strongly_connected",
    "structure_matrices",
    "transition_from_adjacency",
    "verify_flow_identities",
    "verify_inequality",
    "verify_premagic",
]
