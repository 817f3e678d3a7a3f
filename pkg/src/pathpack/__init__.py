"""Edge-disjoint path packing on Eulerian terminal networks, exactly.

The package models networks whose demands are encoded by a clutter of
terminal subsets, solves the associated integer and fractional packing
problems at desk scale with exact arithmetic, and computes the dual
structures (clutter extensions, terminal expansions, join matchings) whose
minimum certifies the packing optimum.
"""

from .errors import (
    GenerationError,
    NonIntegralMultiplicityError,
    NonMaximumFlowError,
    ParseError,
    PathpackError,
    PreconditionError,
    SizeLimitError,
    StructuralError,
    TheoremViolationError,
    UnusedEdgeError,
)
from .flows import CutResult, cut_degree, cut_surplus, max_flow, terminal_cut_size
from .multiflow import (
    AugmentingSequence,
    Multiflow,
    SwitchOutcome,
    TPath,
    Trident,
    apply_split_to_multiflow,
    count_between,
    count_within,
    detect_tridents,
    find_augmenting_sequence,
    is_compound,
    locks,
    node_pairings,
    path_class,
    rewire_crossing,
    split_compound_paths,
    split_node,
    split_preserves,
    switch_paths,
    switch_sequence_to_trident,
    walk,
    weak_value,
)
from .network import (
    CheckItem,
    Clutter,
    Edge,
    Expansion,
    ExpandedNetwork,
    Multigraph,
    Network,
    PairClass,
    ValidationReport,
    check_expansion,
    classify_pair,
    expand,
    validate,
)
from .solvers import (
    SolveResult,
    common_solution,
    enumerate_paths,
    fractionality,
    integrality,
    max_cover_packing,
    max_path_packing,
    solve_strong,
    solve_weak,
    weak_optimal_maximum,
)
from .dual import (
    BMatchingInstance,
    Certificate,
    PairingGraph,
    VerificationReport,
    block_flow_network,
    block_tridents,
    build_pairing_graph,
    certificate_value,
    clutter_extends,
    lift_contracted_paths,
    enumerate_expansions,
    enumerate_flat_extensions,
    expansion_leq,
    expansion_lt,
    line_graph_instance,
    locked_optimum_exists,
    max_join_count,
    minimal_dual_solution,
    search_certificate,
    verify_certificate,
    weak_dual_value,
)
from .generate import generate

__all__ = [name for name in dir() if not name.startswith("_")]
