"""Exact tooling for fractional [a,b]-factors and deletion criticality."""

from .conditions import (
    ConditionReport,
    DeletionCheck,
    KFactorThresholds,
    check_criticality_conditions,
    check_deletion_invariants,
    degree_condition_holds,
    k_factor_thresholds,
    neighborhood_condition_holds,
    order_condition_holds,
    order_threshold,
)
from .constructions import (
    GENERATED_KINDS,
    KIND_DEGREE,
    KIND_NEIGHBORHOOD,
    KIND_RANDOM,
    ConstructionLabels,
    SharpnessReport,
    min_degree_extremal_graph,
    neighborhood_extremal_graph,
    random_graph,
    verify_sharpness,
)
from .criticality import (
    DEFAULT_CRITICALITY_LIMIT,
    CriticalityReport,
    enumerate_independent_sets,
    is_fractional_id_factor_critical,
    maximal_independent_sets,
)
from .errors import ConstructionError, InputError, ResourceLimitError
from .factor import (
    DEFAULT_BRUTE_FORCE_LIMIT,
    AssignmentCheck,
    FactorParams,
    FractionalAssignment,
    Infeasible,
    ViolationCertificate,
    delta_st,
    find_fractional_factor,
    format_assignment,
    has_fractional_factor_bruteforce,
    parse_assignment,
    validate_assignment,
)
from .graphs import (
    Graph,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    empty_graph,
    format_edge_list,
    parse_edge_list,
    path_graph,
)
from .sweep import SweepConfig, SweepResult, parse_sweep_config, run_sweep

__version__ = "0.1.0"

__all__ = [
    "AssignmentCheck",
    "ConditionReport",
    "ConstructionError",
    "ConstructionLabels",
    "CriticalityReport",
    "DEFAULT_BRUTE_FORCE_LIMIT",
    "DEFAULT_CRITICALITY_LIMIT",
    "DeletionCheck",
    "FactorParams",
    "FractionalAssignment",
    "GENERATED_KINDS",
    "Graph",
    "Infeasible",
    "InputError",
    "KFactorThresholds",
    "KIND_DEGREE",
    "KIND_NEIGHBORHOOD",
    "KIND_RANDOM",
    "ResourceLimitError",
    "SharpnessReport",
    "SweepConfig",
    "SweepResult",
    "ViolationCertificate",
    "check_criticality_conditions",
    "check_deletion_invariants",
    "complete_graph",
    "complete_multipartite_graph",
    "cycle_graph",
    "degree_condition_holds",
    "delta_st",
    "empty_graph",
    "enumerate_independent_sets",
    "find_fractional_factor",
    "format_assignment",
    "format_edge_list",
    "has_fractional_factor_bruteforce",
    "is_fractional_id_factor_critical",
    "k_factor_thresholds",
    "maximal_independent_sets",
    "min_degree_extremal_graph",
    "neighborhood_condition_holds",
    "neighborhood_extremal_graph",
    "order_condition_holds",
    "order_threshold",
    "parse_assignment",
    "parse_edge_list",
    "parse_sweep_config",
    "path_graph",
    "random_graph",
    "run_sweep",
    "validate_assignment",
    "verify_sharpness",
]
