"""Sufficient-condition checkers with machine-checkable certificates.

Every checker returns a ClassifierVerdict.  A satisfied verdict carries a
certificate an independent verifier can re-check; a violated verdict carries
a witness for the failed clause; inconclusive means a search budget ran out.
The implied membership is always that of a sufficient condition, never an
exact classification.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .errors import BudgetExceededError
from .girth import (
    INFINITE,
    OrientedEdgeSet,
    check_balance,
    edge_girth,
    edge_set_girth,
)
from .graphs import (
    Cycle,
    Graph,
    component_count,
    enumerate_cycles,
    mask_indices,
    non_bridge_edges,
    spanning_trees,
)

DP_STAR = "DP*"
DP_APPROX = "DP≈"
DP_LESS = "DP<"
UNKNOWN = "unknown"

SATISFIED = "satisfied"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class DpGoodCertificate:
    """Spanning tree, girth-sorted labeling of the other edges, and one
    shortest cycle per labeled edge drawn from the already-available edges."""

    tree: int  # edge mask
    labeling: tuple[int, ...]
    witness_cycles: tuple[Cycle, ...]

    def to_json(self) -> dict:
        return {
            "tree": sorted(mask_indices(self.tree)),
            "labeling": list(self.labeling),
            "cycles": [c.to_json() for c in self.witness_cycles],
        }

    @staticmethod
    def from_json(data: dict) -> "DpGoodCertificate":
        tree = 0
        for i in data["tree"]:
            tree |= 1 << int(i)
        return DpGoodCertificate(
            tree,
            tuple(int(i) for i in data["labeling"]),
            tuple(Cycle(tuple(int(v) for v in seq)) for seq in data["cycles"]),
        )


@dataclass(frozen=True)
class ClassifierVerdict:
    condition: str
    status: str
    implied: str
    certificate: object = None
    witness: object = None
    detail: dict = field(default_factory=dict)

    @property
    def satisfied(self) -> bool:
        return self.status == SATISFIED

    def to_json(self) -> dict:
        return {
            "condition": self.condition,
            "status": self.status,
            "implied": self.implied,
            "note": "satisfied status is a sufficient condition for the "
                    "implied membership, for all large enough fold counts",
            "certificate": _jsonify(self.certificate),
            "witness": _jsonify(self.witness),
            "detail": _jsonify(self.detail),
        }


def _jsonify(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj if obj != INFINITE else "infinity"
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonify(x) for x in obj]
    return repr(obj)


# ---------------------------------------------------------------------------
# DP-good search and verification

def _subgraph_cycle(g: Graph, mask: int) -> Optional[Cycle]:
    """Some cycle inside the spanning subgraph, or None if it is a forest."""
    cyclic = non_bridge_edges(g, mask)
    if cyclic == 0:
        return None
    start_edge = next(mask_indices(cyclic))
    u, v = g.edges[start_edge]
    # shortest u-v path avoiding the edge itself, within the cyclic part
    allowed = set(mask_indices(cyclic))
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for w in g.adj[x]:
            i = g.edge_index(x, w)
            if i not in allowed or i == start_edge or w in parent:
                continue
            parent[w] = x
            queue.append(w)
    path = []
    node: Optional[int] = v
    while node is not None:
        path.append(node)
        node = parent[node]
    return Cycle.from_vertices(g, path)


def _girth_values(g: Graph) -> list[float]:
    return [edge_girth(g, i).value for i in range(len(g.edges))]


def _shortest_path_within(adj: list[set[int]], u: int, v: int, limit: int) -> Optional[list[int]]:
    """Shortest u-v path of length <= limit in the current edge set, if any."""
    parent: dict[int, Optional[int]] = {u: None}
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        if dist[x] >= limit:
            continue
        for w in sorted(adj[x]):
            if w not in parent:
                parent[w] = x
                dist[w] = dist[x] + 1
                queue.append(w)
    if v not in parent:
        return None
    path = []
    node: Optional[int] = v
    while node is not None:
        path.append(node)
        node = parent[node]
    return list(reversed(path))


def _greedy_labeling(g: Graph, tree: int, girths: list[float]):
    """Try to order the non-tree edges of one spanning tree.

    Edges are placed in non-decreasing girth order; an edge can be placed
    once some shortest cycle through it lies inside the tree plus the edges
    placed before it.  Placing any currently placeable edge of minimal girth
    is safe: available cycles only gain edges, so a placeable edge stays
    placeable and a valid ordering can always be rearranged to start with it.
    """
    free = [i for i in range(len(g.edges)) if not (tree >> i & 1)]
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for i in mask_indices(tree):
        u, v = g.edges[i]
        adj[u].add(v)
        adj[v].add(u)

    pending = sorted(free, key=lambda i: (girths[i], i))
    labeling: list[int] = []
    cycles: list[Cycle] = []
    while pending:
        girth_now = girths[pending[0]]
        placed = None
        for e in pending:
            if girths[e] != girth_now:
                break
            u, v = g.edges[e]
            target = int(girths[e]) - 1
            path = _shortest_path_within(adj, u, v, target)
            if path is not None and len(path) - 1 == target:
                placed = (e, path)
                break
        if placed is None:
            return None
        e, path = placed
        labeling.append(e)
        cycles.append(Cycle.from_vertices(g, path))
        u, v = g.edges[e]
        adj[u].add(v)
        adj[v].add(u)
        pending.remove(e)
    return DpGoodCertificate(tree, tuple(labeling), tuple(cycles))


def check_dp_good(g: Graph, budget: int = DEFAULT_BUDGET) -> ClassifierVerdict:
    """Search for a DP-good certificate over spanning trees.

    Edges of even or infinite girth can never be labeled, so every candidate
    tree must contain them; if they already close a cycle no tree exists and
    the verdict is violated outright.
    """
    if g.n > 0 and component_count(g, g.full_mask()) != 1:
        raise ValueError("graph must be connected")
    girths = _girth_values(g)
    forced = 0
    for i, value in enumerate(girths):
        if value == INFINITE or int(value) % 2 == 0:
            forced |= 1 << i
    witness = _subgraph_cycle(g, forced)
    if witness is not None:
        return ClassifierVerdict(
            "dp-good", VIOLATED, UNKNOWN, witness=witness,
            detail={
                "reason": "edges of even or infinite girth contain a cycle, "
                          "so no spanning tree can absorb them all",
                "forced_edges": sorted(mask_indices(forced)),
            },
        )

    stream = spanning_trees(g, budget=budget, forced=forced)
    trees_tried = 0
    for tree in stream:
        trees_tried += 1
        cert = _greedy_labeling(g, tree, girths)
        if cert is not None:
            return ClassifierVerdict(
                "dp-good", SATISFIED, DP_STAR, certificate=cert,
                detail={
                    "trees_tried": trees_tried,
                    "girth_sequence": [int(girths[e]) for e in cert.labeling],
                },
            )
    if stream.truncated:
        return ClassifierVerdict(
            "dp-good", INCONCLUSIVE, UNKNOWN,
            detail={"reason": f"tree budget {budget} exhausted",
                    "trees_tried": trees_tried},
        )
    return ClassifierVerdict(
        "dp-good", VIOLATED, UNKNOWN,
        detail={"reason": "no spanning tree admits a valid labeling",
                "trees_tried": trees_tried},
    )


def certificate_failure_reason(g: Graph, cert: DpGoodCertificate) -> Optional[str]:
    """None if the certificate verifies; otherwise a short reason code."""
    tree = cert.tree
    if tree < 0 or tree >= 1 << len(g.edges):
        return "tree-mask-out-of-range"
    if tree.bit_count() != g.n - 1:
        return "tree-size"
    if component_count(g, tree) != 1:
        return "tree-not-spanning"
    free = sorted(i for i in range(len(g.edges)) if not (tree >> i & 1))
    if sorted(cert.labeling) != free:
        return "labeling-not-the-non-tree-edges"
    if len(cert.witness_cycles) != len(cert.labeling):
        return "cycle-count"
    girths = []
    for e in cert.labeling:
        value = edge_girth(g, e).value
        if value == INFINITE:
            return "labeled-edge-is-a-bridge"
        if int(value) % 2 == 0:
            return "labeled-edge-has-even-girth"
        girths.append(int(value))
    if any(a > b for a, b in zip(girths, girths[1:])):
        return "girths-not-sorted"
    available = tree
    seen_cycles = set()
    for k, (e, cyc) in enumerate(zip(cert.labeling, cert.witness_cycles)):
        try:
            valid = Cycle.from_vertices(g, cyc.vertices)
        except ValueError:
            return f"witness-{k}-not-a-cycle"
        if valid.vertices in seen_cycles:
            return "witness-cycles-not-distinct"
        seen_cycles.add(valid.vertices)
        if len(valid) != girths[k]:
            return f"witness-{k}-wrong-length"
        cmask = valid.edge_mask(g)
        if not (cmask >> e & 1):
            return f"witness-{k}-misses-its-edge"
        available |= 1 << e
        if cmask & ~available:
            return f"witness-{k}-uses-unavailable-edges"
    return None


def verify_dp_good_certificate(g: Graph, cert: DpGoodCertificate) -> bool:
    """Independent re-check of all certificate invariants."""
    return certificate_failure_reason(g, cert) is None


# ---------------------------------------------------------------------------
# connected back-neighborhood vertex orders

def _neighbor_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _mask_connected(nbr: list[int], mask: int) -> bool:
    if mask == 0:
        return False
    reach = mask & -mask
    while True:
        grown = reach
        rest = reach
        while rest:
            low = rest & -rest
            grown |= nbr[low.bit_length() - 1] & mask
            rest ^= low
        if grown == reach:
            return reach == mask
        reach = grown


def check_vertex_order(g: Graph, order: Optional[Sequence[int]] = None,
                       budget: int = DEFAULT_BUDGET) -> ClassifierVerdict:
    """Orders where each vertex's earlier neighbors are non-empty and connected.

    With an order given it is verified; without one, a subset dynamic program
    searches for any valid order (complete while 2^n stays within budget).
    A satisfied verdict implies DP-good and hence the strict cover class.
    """
    condition = "connected-back-neighborhood-order"
    nbr = _neighbor_masks(g)

    if order is not None:
        seq = [int(v) for v in order]
        if sorted(seq) != list(range(g.n)):
            raise ValueError("order must be a permutation of the vertices")
        placed = 0
        for i, v in enumerate(seq):
            if i > 0:
                back = nbr[v] & placed
                if back == 0 or not _mask_connected(nbr, back):
                    return ClassifierVerdict(
                        condition, VIOLATED, UNKNOWN,
                        witness={"index": i, "vertex": v,
                                 "back_neighborhood": sorted(mask_indices(back))},
                    )
            placed |= 1 << v
        return ClassifierVerdict(condition, SATISFIED, DP_STAR,
                                 certificate=tuple(seq))

    if g.n == 0:
        return ClassifierVerdict(condition, SATISFIED, DP_STAR, certificate=())
    if (1 << g.n) > budget:
        return ClassifierVerdict(
            condition, INCONCLUSIVE, UNKNOWN,
            detail={"reason": f"2^{g.n} subsets exceed the budget {budget}"},
        )

    full = (1 << g.n) - 1
    ok = bytearray(full + 1)
    choice = [0] * (full + 1)
    for v in range(g.n):
        ok[1 << v] = 1
    conn_memo: dict[int, bool] = {}
    for mask in range(1, full + 1):
        if ok[mask] or mask.bit_count() < 2:
            continue
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            prev = mask ^ low
            if not ok[prev]:
                continue
            back = nbr[v] & prev
            if back == 0:
                continue
            hit = conn_memo.get(back)
            if hit is None:
                hit = _mask_connected(nbr, back)
                conn_memo[back] = hit
            if hit:
                ok[mask] = 1
                choice[mask] = v
                break
    if not ok[full]:
        return ClassifierVerdict(
            condition, VIOLATED, UNKNOWN,
            detail={"reason": "no vertex order satisfies the condition "
                              "(exhaustive over all orders)"},
        )
    seq = []
    mask = full
    while mask:
        v = choice[mask] if mask.bit_count() > 1 else (mask.bit_length() - 1)
        seq.append(v)
        mask ^= 1 << v
    seq.reverse()
    return ClassifierVerdict(condition, SATISFIED, DP_STAR,
                             certificate=tuple(seq))


# ---------------------------------------------------------------------------
# even set-girth with balanced orientation, and crossing edge sets

def check_balanced_orientation(g: Graph, estar: OrientedEdgeSet,
                               cycle_budget: int = DEFAULT_BUDGET) -> ClassifierVerdict:
    """Even set-girth plus an orientation balanced on every shorter cycle."""
    condition = "balanced-orientation"
    if estar.edges == 0:
        raise ValueError("the oriented edge set must be non-empty")
    r = edge_set_girth(g, estar.edges)
    if not r.is_finite:
        return ClassifierVerdict(
            condition, VIOLATED, UNKNOWN,
            detail={"reason": "no cycle meets the edge set an odd number of times"},
        )
    r0 = int(r.value)
    if r0 % 2 == 1:
        return ClassifierVerdict(
            condition, VIOLATED, UNKNOWN, witness=r.witness,
            detail={"reason": "set girth is odd", "set_girth": r0},
        )
    bal = check_balance(g, estar, r0, cycle_budget=cycle_budget)
    if not bal.balanced:
        return ClassifierVerdict(
            condition, VIOLATED, UNKNOWN, witness=bal.witness,
            detail={"reason": "orientation unbalanced on a short cycle",
                    "set_girth": r0},
        )
    return ClassifierVerdict(
        condition, SATISFIED, DP_LESS,
        certificate={"set_girth": r0, "girth_witness": r.witness,
                     "orientation": estar.to_json(g)},
    )


def crossing_edges(g: Graph, v1: Sequence[int], v2: Sequence[int]) -> int:
    s1, s2 = set(v1), set(v2)
    mask = 0
    for i, (u, v) in enumerate(g.edges):
        if (u in s1 and v in s2) or (u in s2 and v in s1):
            mask |= 1 << i
    return mask


def check_crossing_edge_set(g: Graph, v1: Sequence[int], v2: Sequence[int],
                            estar: Optional[int] = None) -> ClassifierVerdict:
    """Edge set between two vertex classes, even set-girth, and no short
    cycle leaving a cross-class path when its crossing edges are removed.

    Orienting every edge from the first class to the second turns a
    satisfied instance into a balanced orientation, so this delegates its
    guarantee to that condition.
    """
    condition = "crossing-edge-set"
    s1, s2 = set(v1), set(v2)
    if s1 & s2:
        raise ValueError("the vertex classes must be disjoint")
    cross = crossing_edges(g, v1, v2)
    if estar is None:
        estar = cross
    if estar & ~cross:
        raise ValueError("the edge set must lie between the two classes")

    r = edge_set_girth(g, estar)
    if not r.is_finite:
        return ClassifierVerdict(
            condition, VIOLATED, UNKNOWN,
            detail={"reason": "no cycle meets the edge set an odd number of times"},
        )
    r0 = int(r.value)
    if r0 % 2 == 1:
        return ClassifierVerdict(
            condition, VIOLATED, UNKNOWN, witness=r.witness,
            detail={"reason": "set girth is odd", "set_girth": r0},
        )

    if r0 - 1 >= 3:
        for cyc in enumerate_cycles(g, r0 - 1):
            arcs = _arcs_outside(g, cyc, estar)
            if arcs is None:
                continue
            for x, y in arcs:
                if (x in s1 and y in s2) or (x in s2 and y in s1):
                    return ClassifierVerdict(
                        condition, VIOLATED, UNKNOWN, witness=cyc,
                        detail={"reason": "a short cycle minus the crossing "
                                          "edges leaves a cross-class path",
                                "path_endpoints": [x, y], "set_girth": r0},
                    )

    tails = {}
    for i in mask_indices(estar):
        u, v = g.edges[i]
        tails[i] = u if u in s1 else v
    oriented = OrientedEdgeSet.from_tails(g, tails)
    return ClassifierVerdict(
        condition, SATISFIED, DP_LESS,
        certificate={"set_girth": r0, "girth_witness": r.witness,
                     "orientation": oriented.to_json(g),
                     "v1": sorted(s1), "v2": sorted(s2)},
    )


def _arcs_outside(g: Graph, cyc: Cycle, estar: int):
    """Endpoint pairs of the components of the cycle minus the edge set.

    Returns None when the cycle misses the edge set entirely.
    """
    vs = cyc.vertices
    k = len(vs)
    cuts = []
    for pos in range(k):
        i = g.edge_index(vs[pos], vs[(pos + 1) % k])
        if estar >> i & 1:
            cuts.append(pos)
    if not cuts:
        return None
    arcs = []
    for a, b in zip(cuts, cuts[1:] + [cuts[0] + k]):
        # the arc runs from position a+1 to position b (inclusive)
        arcs.append((vs[(a + 1) % k], vs[b % k]))
    return arcs


# ---------------------------------------------------------------------------
# a scan for sufficient conditions

def scan_even_girth(g: Graph) -> ClassifierVerdict:
    """An edge of even girth is already sufficient for the strict class."""
    condition = "even-girth-edge"
    girth_list = []
    for i in range(len(g.edges)):
        r = edge_girth(g, i)
        girth_list.append(int(r.value) if r.is_finite else "infinity")
        if r.is_finite and int(r.value) % 2 == 0:
            return ClassifierVerdict(
                condition, SATISFIED, DP_LESS,
                certificate={"edge": i, "girth": int(r.value),
                             "witness": r.witness},
            )
    return ClassifierVerdict(
        condition, VIOLATED, UNKNOWN,
        detail={"reason": "every edge has odd or infinite girth",
                "edge_girths": girth_list},
    )


def search_quad_crossing(g: Graph, budget: int = DEFAULT_BUDGET,
                         extra_sets: Sequence[tuple[Sequence[int], Sequence[int], int]] = ()) -> ClassifierVerdict:
    """Bounded search for a crossing edge set of set-girth exactly four.

    Candidates are user-supplied sets, single edges, and stars around a
    vertex; exhausting them proves nothing, so the fallback is inconclusive.
    """
    condition = "quad-girth-crossing-set"
    tried = 0

    def candidates():
        for v1, v2, mask in extra_sets:
            yield tuple(v1), tuple(v2), mask
        for i, (u, v) in enumerate(g.edges):
            yield (u,), (v,), 1 << i
        for v in range(g.n):
            nbrs = g.adj[v]
            for size in range(2, len(nbrs) + 1):
                for sub in combinations(nbrs, size):
                    mask = 0
                    for w in sub:
                        mask |= 1 << g.edge_index(v, w)
                    yield (v,), sub, mask

    for v1, v2, mask in candidates():
        if tried >= budget:
            return ClassifierVerdict(
                condition, INCONCLUSIVE, UNKNOWN,
                detail={"reason": f"candidate budget {budget} exhausted",
                        "tried": tried},
            )
        tried += 1
        r = edge_set_girth(g, mask)
        if r.is_finite and int(r.value) == 4:
            return ClassifierVerdict(
                condition, SATISFIED, DP_LESS,
                certificate={"v1": list(v1), "v2": list(v2),
                             "edges": sorted(mask_indices(mask)),
                             "witness": r.witness},
            )
    return ClassifierVerdict(
        condition, INCONCLUSIVE, UNKNOWN,
        detail={"reason": "no candidate in the searched space has set-girth "
                          "four; the search is not exhaustive",
                "tried": tried},
    )


def classify(g: Graph, budget: int = DEFAULT_BUDGET,
             extra_sets: Sequence[tuple[Sequence[int], Sequence[int], int]] = ()) -> list[ClassifierVerdict]:
    """Run every sufficient-condition check and report all verdicts.

    Budget errors inside a sub-check degrade that verdict to inconclusive;
    membership is never claimed beyond what a satisfied condition implies.
    """
    if g.n > 0 and component_count(g, g.full_mask()) != 1:
        raise ValueError("graph must be connected")
    verdicts = []
    checks = [
        ("even-girth-edge", lambda: scan_even_girth(g)),
        ("dp-good", lambda: check_dp_good(g, budget=budget)),
        ("connected-back-neighborhood-order", lambda: check_vertex_order(g, budget=budget)),
        ("quad-girth-crossing-set", lambda: search_quad_crossing(g, budget=budget, extra_sets=extra_sets)),
    ]
    for name, run in checks:
        try:
            verdicts.append(run())
        except BudgetExceededError as exc:
            verdicts.append(ClassifierVerdict(
                name, INCONCLUSIVE, UNKNOWN,
                detail={"reason": f"budget exceeded: {exc}"},
            ))
    return verdicts
