import json

import pytest

import oracles
from conftest import connected_edge_sets, random_connected_graph

from dpchroma import (
    DP_LESS,
    DP_STAR,
    Cycle,
    DpGoodCertificate,
    Graph,
    OrientedEdgeSet,
    certificate_failure_reason,
    check_balanced_orientation,
    check_crossing_edge_set,
    check_dp_good,
    check_vertex_order,
    chromatic_polynomial,
    classify,
    complete_graph,
    complete_multipartite,
    count_transversals,
    cycle_graph,
    dp_exact,
    fig1_graph,
    fig3b_graph,
    path_graph,
    scan_even_girth,
    twisted_cover,
    verify_dp_good_certificate,
)
from dpchroma.graphs import FIG3B_CROSSING, FIG3B_V1, FIG3B_V2


def mask_of(indices):
    out = 0
    for i in indices:
        out |= 1 << i
    return out


# A known-good certificate for the 14-vertex fixture, frozen here:
# 13 tree edges, 8 labeled edges with girths (3,3,3,3,3,3,5,5).
FIG1_TREE = [0, 1, 4, 5, 6, 7, 8, 10, 11, 14, 15, 17, 19]
FIG1_LABELING = [16, 12, 9, 13, 20, 18, 2, 3]
FIG1_CYCLES = [
    (2, 6, 11),
    (5, 6, 9),
    (5, 7, 8),
    (3, 7, 10),
    (0, 1, 13),
    (0, 4, 12),
    (2, 3, 7, 5, 6),
    (0, 1, 2, 3, 4),
]


def fig1_certificate():
    return DpGoodCertificate(
        mask_of(FIG1_TREE),
        tuple(FIG1_LABELING),
        tuple(Cycle(c) for c in FIG1_CYCLES),
    )


# ---------------------------------------------------------------------------
# DP-good search

def test_tree_is_dp_good_with_empty_labeling():
    verdict = check_dp_good(path_graph(5))
    assert verdict.satisfied
    assert verdict.certificate.labeling == ()
    assert verify_dp_good_certificate(path_graph(5), verdict.certificate)


def test_c4_is_not_dp_good():
    verdict = check_dp_good(cycle_graph(4))
    assert verdict.status == "violated"
    # witness: the even-girth edges close a cycle
    assert verdict.witness is not None


def test_k4_is_dp_good():
    g = complete_graph(4)
    verdict = check_dp_good(g)
    assert verdict.satisfied and verdict.implied == DP_STAR
    assert verify_dp_good_certificate(g, verdict.certificate)


def test_fig1_is_dp_good_with_expected_girths():
    g = fig1_graph()
    verdict = check_dp_good(g)
    assert verdict.satisfied
    assert verdict.detail["girth_sequence"] == [3, 3, 3, 3, 3, 3, 5, 5]
    assert verify_dp_good_certificate(g, verdict.certificate)


def test_dp_good_budget_returns_inconclusive():
    verdict = check_dp_good(fig1_graph(), budget=2)
    assert verdict.status == "inconclusive"


def test_dp_good_requires_connected():
    with pytest.raises(ValueError):
        check_dp_good(Graph(4, [(0, 1), (2, 3)]))


def test_emitted_certificates_always_verify(rng):
    seen_satisfied = 0
    for _ in range(40):
        g = random_connected_graph(rng, lo=2, hi=6)
        verdict = check_dp_good(g)
        if verdict.satisfied:
            seen_satisfied += 1
            assert verify_dp_good_certificate(g, verdict.certificate)
    assert seen_satisfied > 0


# ---------------------------------------------------------------------------
# certificate verification

def test_k4_star_certificate_any_order():
    g = complete_graph(4)
    tree = mask_of([0, 1, 2])  # edges at vertex 0
    triangle = {3: (0, 1, 2), 4: (0, 1, 3), 5: (0, 2, 3)}
    for order in ([3, 4, 5], [5, 3, 4], [4, 5, 3]):
        cert = DpGoodCertificate(tree, tuple(order),
                                 tuple(Cycle(triangle[e]) for e in order))
        assert verify_dp_good_certificate(g, cert)


def test_fig1_certificate_verifies():
    assert certificate_failure_reason(fig1_graph(), fig1_certificate()) is None


def test_fig1_certificate_reordered_fails():
    cert = fig1_certificate()
    bad = DpGoodCertificate(
        cert.tree,
        cert.labeling[-2:] + cert.labeling[:-2],
        cert.witness_cycles[-2:] + cert.witness_cycles[:-2],
    )
    assert not verify_dp_good_certificate(fig1_graph(), bad)
    assert certificate_failure_reason(fig1_graph(), bad) == "girths-not-sorted"


def test_certificate_malformed_reasons():
    g = complete_graph(4)
    tree = mask_of([0, 1, 2])
    tri = Cycle((0, 1, 2))
    ok = DpGoodCertificate(tree, (3, 4, 5),
                           (tri, Cycle((0, 1, 3)), Cycle((0, 2, 3))))
    assert verify_dp_good_certificate(g, ok)

    bad_tree = DpGoodCertificate(mask_of([0, 1]), (3, 4, 5), ok.witness_cycles)
    assert certificate_failure_reason(g, bad_tree) == "tree-size"

    wrong_label = DpGoodCertificate(tree, (3, 4, 4), ok.witness_cycles)
    assert certificate_failure_reason(g, wrong_label) == "labeling-not-the-non-tree-edges"

    not_cycle = DpGoodCertificate(tree, (3, 4, 5),
                                  (tri, Cycle((0, 1, 3)), Cycle((0, 2, 9))))
    assert certificate_failure_reason(g, not_cycle) == "witness-2-not-a-cycle"

    misses = DpGoodCertificate(tree, (3, 4, 5),
                               (tri, tri, Cycle((0, 2, 3))))
    assert certificate_failure_reason(g, misses) in {
        "witness-1-misses-its-edge", "witness-cycles-not-distinct"}

    # C4-like even girth rejection
    c4 = cycle_graph(4)
    cert = DpGoodCertificate(mask_of([0, 1, 2]), (3,), (Cycle((0, 1, 2, 3)),))
    assert certificate_failure_reason(c4, cert) == "labeled-edge-has-even-girth"


def test_certificate_unavailable_edges_detected():
    g = fig1_graph()
    cert = fig1_certificate()
    # swap the long-cycle order: the outer 5-cycle needs edge 2 available first
    labeling = list(cert.labeling)
    cycles = list(cert.witness_cycles)
    labeling[6], labeling[7] = labeling[7], labeling[6]
    cycles[6], cycles[7] = cycles[7], cycles[6]
    bad = DpGoodCertificate(cert.tree, tuple(labeling), tuple(cycles))
    assert certificate_failure_reason(g, bad) == "witness-6-uses-unavailable-edges"


def test_certificate_json_round_trip():
    g = fig1_graph()
    cert = fig1_certificate()
    data = json.loads(json.dumps(cert.to_json()))
    back = DpGoodCertificate.from_json(data)
    assert back == cert
    assert verify_dp_good_certificate(g, back)


# ---------------------------------------------------------------------------
# vertex orders

def test_k4_any_order_satisfies():
    g = complete_graph(4)
    from itertools import permutations

    for order in permutations(range(4)):
        assert check_vertex_order(g, order).satisfied


def test_c4_every_order_fails():
    g = cycle_graph(4)
    from itertools import permutations

    for order in permutations(range(4)):
        assert check_vertex_order(g, order).status == "violated"
    assert check_vertex_order(g).status == "violated"


def test_vertex_order_search_returns_verifiable_order(rng):
    hits = 0
    for _ in range(40):
        g = random_connected_graph(rng, lo=2, hi=6)
        verdict = check_vertex_order(g)
        if verdict.satisfied:
            hits += 1
            assert check_vertex_order(g, verdict.certificate).satisfied
    assert hits > 0


def test_complete_tripartite_is_orderable():
    verdict = check_vertex_order(complete_multipartite([1, 1, 2]))
    assert verdict.satisfied and verdict.implied == DP_STAR


def test_vertex_order_rejects_non_permutation():
    with pytest.raises(ValueError):
        check_vertex_order(cycle_graph(4), [0, 1, 2, 2])


def test_order_implies_dp_good_small():
    for n in range(2, 6):
        for edges in connected_edge_sets(n):
            g = Graph(n, edges)
            if check_vertex_order(g).satisfied:
                assert check_dp_good(g).satisfied


def test_dp_good_graphs_have_dp_equal_chromatic_at_small_m():
    # desk-scale soundness: satisfied certificates really mark covers whose
    # minimum matches the chromatic count for small fold numbers
    for n in range(2, 6):
        for edges in connected_edge_sets(n):
            if len(edges) - (n - 1) > 3:
                continue
            g = Graph(n, edges)
            if check_dp_good(g).satisfied:
                p = chromatic_polynomial(g)
                for m in (2, 3):
                    assert dp_exact(g, m).value == p(m)


# ---------------------------------------------------------------------------
# balanced orientations and crossing sets

def test_balanced_orientation_c4():
    g = cycle_graph(4)
    est = OrientedEdgeSet.from_pairs(g, [(0, 1)])
    verdict = check_balanced_orientation(g, est)
    assert verdict.satisfied and verdict.implied == DP_LESS
    assert verdict.certificate["set_girth"] == 4


def test_balanced_orientation_k4_single_edge_fails():
    g = complete_graph(4)
    est = OrientedEdgeSet.from_pairs(g, [(0, 1)])
    verdict = check_balanced_orientation(g, est)
    assert verdict.status == "violated"
    assert verdict.detail["set_girth"] == 3


def test_balanced_orientation_empty_set_error():
    with pytest.raises(ValueError):
        check_balanced_orientation(cycle_graph(4), OrientedEdgeSet(0, ()))


def test_balanced_orientation_matches_brute_force_evaluation():
    # plain 4-cycle and the 4-cycle plus a chord; every edge set of size
    # one or two, every orientation, against a direct conditions check
    from itertools import combinations, product

    graphs = [cycle_graph(4), Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])]
    for g in graphs:
        cycles = oracles.all_cycles(g.n, list(g.edges))
        for k in (1, 2):
            for subset in combinations(range(g.m), k):
                for tails_choice in product(*[g.edges[i] for i in subset]):
                    tails = dict(zip(subset, tails_choice))
                    est = OrientedEdgeSet.from_tails(g, tails)
                    got = check_balanced_orientation(g, est)
                    r0, _ = oracles.edge_set_girth(g.n, list(g.edges), set(subset))
                    expect = (r0 is not None and r0 % 2 == 0
                              and _oracle_balanced(g, tails, cycles, r0))
                    assert got.satisfied == expect


def _oracle_balanced(g, tails, cycles, bound):
    for cyc in cycles:
        if len(cyc) >= bound:
            continue
        along = against = 0
        for a, b in zip(cyc, cyc[1:] + (cyc[0],)):
            i = g.edge_index(a, b)
            if i in tails:
                if tails[i] == a:
                    along += 1
                else:
                    against += 1
        if along + against and along != against:
            return False
    return True


def test_crossing_edge_set_c4():
    g = cycle_graph(4)
    verdict = check_crossing_edge_set(g, [0], [1], 1 << 0)
    assert verdict.satisfied
    assert verdict.certificate["set_girth"] == 4


def test_crossing_edge_set_fig3b():
    g = fig3b_graph()
    estar = g.edge_mask(FIG3B_CROSSING)
    verdict = check_crossing_edge_set(g, FIG3B_V1, FIG3B_V2, estar)
    assert verdict.satisfied and verdict.implied == DP_LESS
    assert verdict.certificate["set_girth"] == 4


def test_crossing_edge_set_k4_odd_girth():
    g = complete_graph(4)
    verdict = check_crossing_edge_set(g, [0], [1], 1 << g.edge_index(0, 1))
    assert verdict.status == "violated"


def test_crossing_edge_set_validation():
    g = cycle_graph(4)
    with pytest.raises(ValueError):
        check_crossing_edge_set(g, [0, 1], [1, 2])
    with pytest.raises(ValueError):
        check_crossing_edge_set(g, [0], [1], 1 << 1)  # edge (1,2) not crossing


def test_crossing_satisfied_implies_balanced_orientation(rng):
    # the class-to-class orientation must then pass the balance conditions
    def implication_holds(g, v1, v2, estar=None):
        verdict = check_crossing_edge_set(g, v1, v2, estar)
        if not verdict.satisfied:
            return False
        tails = {}
        s1 = set(v1)
        for item in verdict.certificate["orientation"]:
            tails[item["edge"]] = item["tail"]
            assert item["tail"] in s1
        est = OrientedEdgeSet.from_tails(g, tails)
        assert check_balanced_orientation(g, est).satisfied
        return True

    fig3b = fig3b_graph()
    c6 = cycle_graph(6)
    positives = [
        (cycle_graph(4), [0], [1], None),
        (c6, [0], [1], None),
        # three alternating edges of the 6-cycle: odd intersection, girth 6
        (c6, [0, 2, 4], [1, 3, 5], c6.edge_mask([(0, 1), (2, 3), (4, 5)])),
        (fig3b, FIG3B_V1, FIG3B_V2, fig3b.edge_mask(FIG3B_CROSSING)),
    ]
    for g, v1, v2, estar in positives:
        assert implication_holds(g, v1, v2, estar)
    # random splits rarely qualify, but whenever one does the
    # delegation must hold as well
    for _ in range(80):
        g = random_connected_graph(rng, lo=3, hi=6)
        v1 = [v for v in range(g.n) if rng.random() < 0.4]
        v2 = [v for v in range(g.n) if v not in v1 and rng.random() < 0.5]
        if v1 and v2:
            implication_holds(g, v1, v2)


def test_twist_beats_chromatic_on_balanced_fixtures():
    pendant = Graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 5)])
    for g in (cycle_graph(4), cycle_graph(6), pendant):
        est = OrientedEdgeSet.from_tails(g, {0: g.edges[0][0]})
        verdict = check_balanced_orientation(g, est)
        assert verdict.satisfied
        p = chromatic_polynomial(g)
        for m in range(2, 9):
            cov = twisted_cover(g, est, m)
            assert count_transversals(g, cov).value < p(m)


# ---------------------------------------------------------------------------
# the aggregate classifier

def test_classify_c6_even_girth():
    verdicts = classify(cycle_graph(6))
    by_name = {v.condition: v for v in verdicts}
    assert by_name["even-girth-edge"].satisfied
    assert by_name["even-girth-edge"].implied == DP_LESS
    assert not by_name["dp-good"].satisfied


def test_classify_k4_dp_star():
    verdicts = classify(complete_graph(4))
    by_name = {v.condition: v for v in verdicts}
    assert by_name["dp-good"].satisfied
    assert by_name["dp-good"].implied == DP_STAR
    assert by_name["even-girth-edge"].status == "violated"


def test_classify_fig1():
    verdicts = classify(fig1_graph())
    by_name = {v.condition: v for v in verdicts}
    assert by_name["dp-good"].satisfied and by_name["dp-good"].implied == DP_STAR
    assert by_name["even-girth-edge"].status == "violated"


def test_classify_reports_all_four_checks():
    verdicts = classify(cycle_graph(5))
    assert [v.condition for v in verdicts] == [
        "even-girth-edge", "dp-good", "connected-back-neighborhood-order",
        "quad-girth-crossing-set",
    ]


def test_scan_even_girth_odd_graph():
    verdict = scan_even_girth(complete_graph(4))
    assert verdict.status == "violated"
    assert verdict.detail["edge_girths"] == [3] * 6


def test_verdicts_serialize_to_json(rng):
    for g in (cycle_graph(4), cycle_graph(5), complete_graph(4), fig1_graph()):
        for verdict in classify(g):
            blob = json.dumps(verdict.to_json(), ensure_ascii=False)
            assert json.loads(blob)["condition"] == verdict.condition
