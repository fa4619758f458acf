"""Exact computational topology of metric graphs.

Systoles (weighted girth), first Betti numbers, and constructions of short
homologically independent loops based at a single point, all certified with
exact rational arithmetic and cross-checked against brute-force oracles.
"""

from .graph import (
    BasedLoop,
    Edge,
    GraphError,
    MetricGraph,
    content_hash,
    from_document,
    load,
    make_loop,
    save,
    to_document,
)
from .homology import (
    RankCertificate,
    cycle_vector,
    free_ball_size,
    is_boundary_zero,
    is_independent,
    rank,
)
from .metric import PathResult, dist_subgraphs, dist_to_subgraph, shortest_path
from .systole import SystolicCycle, check_bst_bound, systole
from .loops import (
    LoopCertificate,
    cluster_short_cycles,
    independent_based_loops,
    reroute_to_base,
    short_cycle_sequence,
)
from .generators import StarParams, gen_bouquet, gen_random, gen_star, star_optimal_params
from .oracle import OracleCapExceeded, best_base_rank, brute_systole, max_rank_under_budget
from .certify import certificate_document, parse_certificate, verify_certificate

__all__ = [
    "BasedLoop",
    "Edge",
    "GraphError",
    "LoopCertificate",
    "MetricGraph",
    "OracleCapExceeded",
    "PathResult",
    "RankCertificate",
    "StarParams",
    "SystolicCycle",
    "best_base_rank",
    "brute_systole",
    "certificate_document",
    "check_bst_bound",
    "cluster_short_cycles",
    "content_hash",
    "cycle_vector",
    "dist_subgraphs",
    "dist_to_subgraph",
    "free_ball_size",
    "from_document",
    "gen_bouquet",
    "gen_random",
    "gen_star",
    "independent_based_loops",
    "is_boundary_zero",
    "is_independent",
    "load",
    "make_loop",
    "max_rank_under_budget",
    "parse_certificate",
    "rank",
    "reroute_to_base",
    "save",
    "shortest_path",
    "short_cycle_sequence",
    "star_optimal_params",
    "systole",
    "to_document",
    "verify_certificate",
]

__version__ = "0.1.0"
