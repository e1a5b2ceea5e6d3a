"""Exact Wiener indices of simple connected graphs, a sharp lower bound in
terms of order, size and diameter, and verification sweeps over small-graph
and random corpora."""

from .bounds import (
    BoundReport,
    MooreResult,
    diameter_two_wiener,
    evaluate,
    moore_bound,
    moore_diameter_lower_bound,
    off_path_vertex_excess,
    path_pair_excess,
    wiener_lower_bound,
    wiener_lower_bound_from_degree,
)
from .errors import DisconnectedGraphError, Graph6ParseError, NotApplicableError
from .graph import (
    Graph,
    from_edge_list,
    is_connected,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .metrics import (
    DiametralPartition,
    DistanceDistribution,
    bfs_distances,
    diameter,
    diametral_partition,
    diametral_path,
    distance_distribution,
    eccentricities,
    wiener_index,
)
from .verifier import (
    MonotonicityReport,
    SharpnessRecord,
    SweepSummary,
    exhaustive_sweep,
    monotonicity_scan,
    random_sweep,
    sharpness_scan,
    stream_sweep,
    triangle_property_check,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DiametralPartition",
    "DisconnectedGraphError",
    "DistanceDistribution",
    "Graph",
    "Graph6ParseError",
    "MonotonicityReport",
    "MooreResult",
    "NotApplicableError",
    "SharpnessRecord",
    "SweepSummary",
    "bfs_distances",
    "diameter",
    "diameter_two_wiener",
    "diametral_partition",
    "diametral_path",
    "distance_distribution",
    "eccentricities",
    "evaluate",
    "exhaustive_sweep",
    "from_edge_list",
    "is_connected",
    "monotonicity_scan",
    "moore_bound",
    "moore_diameter_lower_bound",
    "off_path_vertex_excess",
    "parse_edge_list",
    "parse_graph6",
    "path_pair_excess",
    "random_sweep",
    "sharpness_scan",
    "stream_sweep",
    "triangle_property_check",
    "wiener_index",
    "wiener_lower_bound",
    "wiener_lower_bound_from_degree",
    "write_edge_list",
    "write_graph6",
    "__version__",
]
