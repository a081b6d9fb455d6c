"""Minimum-eccentricity shortest paths in unweighted graphs.

Exact solvers for distance-hereditary graphs (diametral-pair extraction) and
for graphs with a bounded projection gap (window dynamic program), a
double-sweep additive approximation, structural analysis to choose the DP
width, deterministic family generators, and a brute-force oracle for
desk-scale validation.
"""

from .approx import FurthestPairTrace, approx_mesp, mutually_furthest_pair
from .distance_hereditary import (
    DistanceHereditaryCheck,
    best_st_path,
    is_distance_hereditary,
    solve_dh,
)
from .edgelist import format_edge_list, parse_edge_list
from .errors import BudgetExceededError, ClassMismatchError, GraphInputError
from .generators import (
    gen_cycle,
    gen_path,
    gen_random_chordal,
    gen_random_dh,
    gen_random_tree,
)
from .graph import (
    Graph,
    MetricReport,
    VertexPath,
    all_pairs,
    bfs_distances,
    double_sweep,
    eccentricity_of_set,
    interval,
    interval_slice,
    metric_report,
    projection,
)
from .oracle import (
    EnumerationBudget,
    OracleResult,
    enumerate_shortest_paths,
    exact_mesp,
    exact_projection_gap,
    exact_source_mesp,
)
from .results import Certificate, Guarantee, SolveResult
from .solver import solve
from .structure import (
    ChordalityCheck,
    GammaEstimate,
    LayeringPartition,
    gamma_from_layering,
    hyperbolicity_x2,
    is_chordal,
    layering_partition,
    select_gamma,
)
from .window_dp import (
    enumerate_windows,
    forward_cone_distances,
    predecessor_windows,
    reconstruct_path,
    settled_set,
    solve_from_source,
    solve_global,
    window_dp,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Certificate",
    "ChordalityCheck",
    "ClassMismatchError",
    "DistanceHereditaryCheck",
    "EnumerationBudget",
    "FurthestPairTrace",
    "GammaEstimate",
    "Graph",
    "GraphInputError",
    "Guarantee",
    "LayeringPartition",
    "MetricReport",
    "OracleResult",
    "SolveResult",
    "VertexPath",
    "all_pairs",
    "approx_mesp",
    "best_st_path",
    "bfs_distances",
    "double_sweep",
    "eccentricity_of_set",
    "enumerate_shortest_paths",
    "enumerate_windows",
    "exact_mesp",
    "exact_projection_gap",
    "exact_source_mesp",
    "format_edge_list",
    "forward_cone_distances",
    "gamma_from_layering",
    "gen_cycle",
    "gen_path",
    "gen_random_chordal",
    "gen_random_dh",
    "gen_random_tree",
    "hyperbolicity_x2",
    "interval",
    "interval_slice",
    "is_chordal",
    "is_distance_hereditary",
    "layering_partition",
    "metric_report",
    "mutually_furthest_pair",
    "parse_edge_list",
    "predecessor_windows",
    "projection",
    "reconstruct_path",
    "select_gamma",
    "settled_set",
    "solve",
    "solve_dh",
    "solve_from_source",
    "solve_global",
    "window_dp",
]
