"""Desk-scale combinatorics of intersecting uniform hypergraphs.

Core objects: uniform hypergraphs with bitmask edges, positive
co-degree, kernel systems, sunflowers, transversals, and exact extremal
searches over maximal intersecting families.
"""

from .hypergraphs import (
    Hypergraph,
    LimitExceeded,
    VertexSet,
    are_cross_intersecting,
    complete_hypergraph,
    mask_of,
    star,
    vertices_of,
)
from .hgio import HgFormatError, format_hg, parse_hg, read_hg, write_hg
from .kernels import KernelParams, build_kernel_system, kernel_cover, kernel_edge_count
from .sunflowers import (
    Sunflower,
    erdos_rado_greedy,
    extract_small_core,
    find_sunflower_exact,
    is_sunflower_in,
)
from .transversals import (
    CoveringFamily,
    CrossPairReport,
    TransversalTooSmall,
    check_tau_bound,
    check_tau_equals_k,
    covering_family,
    max_cross_pair,
    max_cross_pair_report,
    minimum_transversal,
    tau,
)
from .extremal import (
    SearchReport,
    canonical_key,
    codegree_core,
    enumerate_maximal_intersecting,
    isomorphic,
    max_intersecting_with_codegree,
    naive_max_intersecting_with_codegree,
    replacement_walk_witness,
    uniformity_bound_check,
)

__version__ = "0.1.0"

__all__ = [
    "Hypergraph",
    "VertexSet",
    "LimitExceeded",
    "are_cross_intersecting",
    "complete_hypergraph",
    "star",
    "mask_of",
    "vertices_of",
    "HgFormatError",
    "parse_hg",
    "format_hg",
    "read_hg",
    "write_hg",
    "KernelParams",
    "build_kernel_system",
    "kernel_edge_count",
    "kernel_cover",
    "Sunflower",
    "find_sunflower_exact",
    "erdos_rado_greedy",
    "extract_small_core",
    "is_sunflower_in",
    "CoveringFamily",
    "TransversalTooSmall",
    "CrossPairReport",
    "tau",
    "minimum_transversal",
    "covering_family",
    "check_tau_bound",
    "check_tau_equals_k",
    "max_cross_pair",
    "max_cross_pair_report",
    "SearchReport",
    "codegree_core",
    "enumerate_maximal_intersecting",
    "max_intersecting_with_codegree",
    "naive_max_intersecting_with_codegree",
    "canonical_key",
    "isomorphic",
    "uniformity_bound_check",
    "replacement_walk_witness",
    "__version__",
]
