"""Chromatic polynomials, DP color functions and cover certificates."""

from .chromatic import Polynomial, chromatic_incl_excl, chromatic_polynomial
from .classify import (
    DP_APPROX,
    DP_LESS,
    DP_STAR,
    UNKNOWN,
    ClassifierVerdict,
    DpGoodCertificate,
    certificate_failure_reason,
    check_balanced_orientation,
    check_crossing_edge_set,
    check_dp_good,
    check_vertex_order,
    classify,
    scan_even_girth,
    search_quad_crossing,
    verify_dp_good_certificate,
)
from .covers import (
    CountReport,
    Cover,
    SlopingReport,
    build_cover,
    canonical_cover,
    count_incl_excl,
    count_transversals,
    dp_exact,
    matched_selection_count,
    sloping_report,
    twisted_cover,
)
from .errors import BudgetExceededError, GraphParseError
from .girth import (
    INFINITE,
    BalanceVerdict,
    GirthResult,
    OrientedEdgeSet,
    check_balance,
    edge_girth,
    edge_set_girth,
    shortest_odd_cycles,
)
from .graphs import (
    Cycle,
    Graph,
    SpanningTreeStream,
    bfs_tree,
    complete_graph,
    complete_multipartite,
    component_count,
    cycle_graph,
    enumerate_cycles,
    fig1_graph,
    fig3b_graph,
    fixture,
    mask_indices,
    non_bridge_edges,
    parse_graph,
    path_graph,
    spanning_trees,
)

__version__ = "0.1.0"
