"""
Edge girth, set girth and balanced orientations
===============================================

The girth of one edge is the length of a shortest cycle through it; the
girth of an edge set asks for a shortest cycle meeting the set an odd
number of times, found on a two-layer parity cover.  Directed edge sets
are balanced on a cycle when exactly half of the crossed edges agree with
the traversal direction.
"""

from dpchroma import (
    Graph,
    OrientedEdgeSet,
    check_balance,
    complete_graph,
    cycle_graph,
    edge_girth,
    edge_set_girth,
)

print("Girths and balance")
print("=" * 60)

###############################################################################
# Per-edge girth, with a bridge giving an infinite value.

g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (0, 4)])
for i in range(g.m):
    r = edge_girth(g, i)
    value = int(r.value) if r.is_finite else "infinity"
    print(f"edge {i} {g.edges[i]}: girth {value}")

###############################################################################
# Set girth: parity matters, not membership.  Two opposite edges of a
# 4-cycle are met together by every cycle, so no odd intersection exists.

c4 = cycle_graph(4)
single = edge_set_girth(c4, 1 << 0)
print(f"\nC4, one edge: set girth {int(single.value)}, "
      f"witness {list(single.witness.vertices)}")
opposite = (1 << 0) | (1 << 2)
r = edge_set_girth(c4, opposite)
print(f"C4, opposite pair: set girth "
      f"{int(r.value) if r.is_finite else 'infinity'}")

k4 = complete_graph(4)
r = edge_set_girth(k4, 1 << k4.edge_index(0, 1))
print(f"K4, edge (0,1): set girth {int(r.value)} via {list(r.witness.vertices)}")

###############################################################################
# Balance on short cycles depends on the chosen directions.

est = OrientedEdgeSet.from_pairs(c4, [(0, 1), (2, 3)])
verdict = check_balance(c4, est, 5)
print(f"\nboth opposite edges directed forward: balanced={verdict.balanced}, "
      f"witness {list(verdict.witness.vertices)}")

est_flipped = OrientedEdgeSet.from_pairs(c4, [(0, 1), (3, 2)])
verdict = check_balance(c4, est_flipped, 5)
print(f"one direction flipped: balanced={verdict.balanced}")

###############################################################################
# Reversing every direction never changes a balance verdict.

assert check_balance(c4, est.reversed(c4), 5).balanced == \
    check_balance(c4, est, 5).balanced
print("reversing the whole orientation preserves the verdict")
