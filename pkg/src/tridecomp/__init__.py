"""Triangle decompositions of multigraphs with minimum added parallel copies.

The package constructs graph families that need a known number of added
parallel copies to become triangle decomposable, emits machine-checkable
certificates, and verifies minimality with an exact search.
"""

from .analysis import (
    FaceTrace,
    RotationSystem,
    find_hamiltonian_cycle,
    is_eulerian,
    is_maximal_outerplanar,
    is_strongly_k3_divisible,
    trace_faces,
)
from .augment import (
    Augmentation,
    BoundReport,
    DEFAULT_SWEEP_CEILING,
    MopCode,
    apply_augmentation,
    enumerate_mops,
    epsilon_class_exact,
    epsilon_exact,
    lower_bound,
    xi_class_exact,
)
from .decomposer import (
    Decomposition,
    RejectReason,
    check_decomposition,
    coverage_error,
    enumerate_triangles,
    fast_reject,
    find_decomposition,
)
from .families import (
    ConstructionResult,
    fan,
    hmp_construct,
    intermediate,
    kop_construct,
    mop_construct,
    sc2_tree_construct,
    sc2_tree_seed,
    sc3_construct,
    sf_fixture,
    validate_construction,
)
from .graph_core import (
    AugmentNonAdjacent,
    CapInfeasible,
    ConstructionUnavailable,
    DomainError,
    EdgeKey,
    EdgeNotOnTriangle,
    InfeasibleParity,
    InvariantViolation,
    Multigraph,
    NotAFixture,
    ScaleLimit,
    Triangle,
    TridecompError,
    add_parallel,
    complete_graph,
    cycle_graph,
    degree,
    degree_sequence,
    edge,
    remove_parallel,
    triangle,
    triangles_through,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentNonAdjacent",
    "Augmentation",
    "BoundReport",
    "CapInfeasible",
    "ConstructionResult",
    "ConstructionUnavailable",
    "DEFAULT_SWEEP_CEILING",
    "Decomposition",
    "DomainError",
    "EdgeKey",
    "EdgeNotOnTriangle",
    "FaceTrace",
    "InfeasibleParity",
    "InvariantViolation",
    "MopCode",
    "Multigraph",
    "NotAFixture",
    "RejectReason",
    "RotationSystem",
    "ScaleLimit",
    "Triangle",
    "TridecompError",
    "add_parallel",
    "apply_augmentation",
    "check_decomposition",
    "complete_graph",
    "coverage_error",
    "cycle_graph",
    "degree",
    "degree_sequence",
    "edge",
    "enumerate_mops",
    "enumerate_triangles",
    "epsilon_class_exact",
    "epsilon_exact",
    "fan",
    "fast_reject",
    "find_decomposition",
    "find_hamiltonian_cycle",
    "hmp_construct",
    "intermediate",
    "is_eulerian",
    "is_maximal_outerplanar",
    "is_strongly_k3_divisible",
    "kop_construct",
    "lower_bound",
    "mop_construct",
    "remove_parallel",
    "sc2_tree_construct",
    "sc2_tree_seed",
    "sc3_construct",
    "sf_fixture",
    "trace_faces",
    "triangle",
    "triangles_through",
    "validate_construction",
]
