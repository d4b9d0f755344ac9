"""Pseudometric extensions of nonnegative edge weights on finite simple graphs."""

__version__ = "0.1.0"

from .completion import CompletionSpec, complete_disconnected, star_supergraph
from .graph import (
    DEFAULT_EPS,
    CycleWitness,
    DistanceMatrix,
    GraphError,
    GraphFormatError,
    Violation,
    WeightedGraph,
    connected_components,
    edge_key,
    parse_edge_list,
    to_edge_list,
    validate_matrix_shape,
)
from .metrization import (
    MetrizabilityReport,
    NotMetrizableError,
    bridges,
    check_metrizable,
    free_reweight_set,
    is_forest,
    metric_exists,
    validate_membership,
)
from .multipartite import (
    NotMultipartiteError,
    Partition,
    PreconditionError,
    QuadReport,
    TheoremViolation,
    analyze_quadrilateral,
    detect_partition,
    greatest_vs_least_interval,
    is_star,
    least_pseudometric,
    quadrilateral,
    sandwich_sample,
    sandwich_validate,
)
from .shortest_path import PathRecord, all_pairs_distance, shortest_path_witness

__all__ = [
    "CompletionSpec",
    "complete_disconnected",
    "star_supergraph",
    "DEFAULT_EPS",
    "CycleWitness",
    "DistanceMatrix",
    "GraphError",
    "GraphFormatError",
    "Violation",
    "WeightedGraph",
    "connected_components",
    "edge_key",
    "parse_edge_list",
    "to_edge_list",
    "validate_matrix_shape",
    "MetrizabilityReport",
    "NotMetrizableError",
    "bridges",
    "check_metrizable",
    "free_reweight_set",
    "is_forest",
    "metric_exists",
    "validate_membership",
    "NotMultipartiteError",
    "Partition",
    "PreconditionError",
    "QuadReport",
    "TheoremViolation",
    "analyze_quadrilateral",
    "detect_partition",
    "greatest_vs_least_interval",
    "is_star",
    "least_pseudometric",
    "quadrilateral",
    "sandwich_sample",
    "sandwich_validate",
    "PathRecord",
    "all_pairs_distance",
    "shortest_path_witness",
]
