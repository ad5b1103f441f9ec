"""Immutable simple graphs with edge-subset combinatorics.

Vertices are 0..n-1.  Edges are stored as a tuple of (u, v) pairs with
u < v; the position of a pair in that tuple is the edge's index, stable
for the lifetime of the graph.  Edge subsets are plain int bitmasks over
those indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import BudgetExceededError, GraphParseError

DEFAULT_CYCLE_BUDGET = 10**6
DEFAULT_TREE_BUDGET = 10**6


class Graph:
    """Simple undirected graph, immutable after construction."""

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm: list[tuple[int, int]] = []
        index: dict[tuple[int, int], int] = {}
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in index:
                raise ValueError(f"duplicate edge {e}")
            index[e] = len(norm)
            norm.append(e)
        self.n = n
        self.edges = tuple(norm)
        self._index = index
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def full_mask(self) -> int:
        return (1 << len(self.edges)) - 1

    def edge_index(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        try:
            return self._index[e]
        except KeyError:
            raise KeyError(f"no edge {e}") from None

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self._index

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_mask(self, pairs: Iterable[tuple[int, int]]) -> int:
        mask = 0
        for u, v in pairs:
            mask |= 1 << self.edge_index(u, v)
        return mask

    def mask_edges(self, mask: int) -> list[tuple[int, int]]:
        return [self.edges[i] for i in mask_indices(mask)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def mask_indices(mask: int) -> Iterator[int]:
    """Indices of the set bits of a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Cycle:
    """A simple cycle as a canonical vertex sequence.

    Canonical form: the smallest vertex comes first, and of the two
    traversal directions the one with the smaller second vertex is kept,
    so equal cycles compare equal as tuples.
    """

    vertices: tuple[int, ...]

    @staticmethod
    def from_vertices(g: Graph, seq: Iterable[int]) -> "Cycle":
        vs = tuple(seq)
        if len(vs) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle vertices must be distinct")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if not g.has_edge(a, b):
                raise ValueError(f"({a}, {b}) is not an edge")
        return Cycle(_canonical_rotation(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_pairs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(a, b) if a < b else (b, a) for a, b in zip(vs, vs[1:] + vs[:1])]

    def edge_mask(self, g: Graph) -> int:
        return g.edge_mask(self.edge_pairs())

    def to_json(self) -> list[int]:
        return list(self.vertices)


def _canonical_rotation(vs: tuple[int, ...]) -> tuple[int, ...]:
    k = vs.index(min(vs))
    rot = vs[k:] + vs[:k]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: first data line n, then one "u v" per line.

    Lines starting with '#' are comments.  Pairs are normalized to u < v and
    de-duplicated keeping first-occurrence order.
    """
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphParseError(f"expected vertex count at line {lineno}, got {line!r}")
            if n < 0:
                raise GraphParseError(f"negative vertex count at line {lineno}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"malformed edge at line {lineno}: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"malformed edge at line {lineno}: {line!r}")
        if u == v:
            raise GraphParseError(f"loop at line {lineno}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"endpoint out of range at line {lineno}: {line!r}")
        e = (u, v) if u < v else (v, u)
        if e not in seen:
            seen.add(e)
            edges.append(e)
    if n is None:
        raise GraphParseError("empty input: no vertex count line")
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# named fixtures (generated, not parsed)

def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for u in range(bounds[a], bounds[a + 1]):
                for v in range(bounds[b], bounds[b + 1]):
                    edges.append((u, v))
    return Graph(n, edges)


# 14 vertices, 21 edges: outer 5-cycle, an inner 5-cycle sharing the edge
# (2, 3), and six pendant triangles hanging off the two cycles.
_FIG1_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (2, 6), (5, 6), (5, 7), (3, 7),
    (5, 8), (7, 8),
    (5, 9), (6, 9),
    (7, 10), (3, 10),
    (6, 11), (2, 11),
    (4, 12), (0, 12),
    (0, 13), (1, 13),
]


def fig1_graph() -> Graph:
    return Graph(14, _FIG1_EDGES)


# 10 vertices, 22 edges; the interesting edge set runs between the vertex
# classes {0, 2, 6} and {1, 3, 7}.
_FIG3B_EDGES = [
    (2, 3), (2, 7), (3, 6), (0, 3), (1, 2),
    (3, 5), (4, 5), (2, 4), (0, 2), (1, 3), (0, 4),
    (4, 6), (6, 8), (4, 8), (1, 5), (5, 9), (7, 9),
    (5, 7), (2, 6), (3, 7), (5, 8), (4, 9),
]

FIG3B_V1 = (0, 2, 6)
FIG3B_V2 = (1, 3, 7)
FIG3B_CROSSING = _FIG3B_EDGES[:5]


def fig3b_graph() -> Graph:
    return Graph(10, _FIG3B_EDGES)


def fixture(name: str) -> Graph:
    """Resolve a fixture name like "cycle:4" or "fig1" to a Graph."""
    base, _, arg = name.partition(":")
    try:
        if base == "cycle":
            return cycle_graph(int(arg))
        if base == "path":
            return path_graph(int(arg))
        if base == "complete":
            return complete_graph(int(arg))
        if base == "complete_multipartite":
            return complete_multipartite(int(s) for s in arg.split(","))
        if base == "fig1" and not arg:
            return fig1_graph()
        if base == "fig3b" and not arg:
            return fig3b_graph()
    except ValueError as exc:
        raise ValueError(f"bad fixture {name!r}: {exc}") from None
    raise ValueError(f"unknown fixture {name!r}")


# ---------------------------------------------------------------------------
# edge-subset combinatorics

def component_count(g: Graph, mask: int) -> int:
    """Components of the spanning subgraph with edge set `mask`."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = g.n
    for i in mask_indices(mask):
        u, v = g.edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def component_vertex_sets(g: Graph, mask: int) -> list[list[int]]:
    """Vertex sets of the components of the spanning subgraph, sorted."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in mask_indices(mask):
        u, v = g.edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def non_bridge_edges(g: Graph, mask: int) -> int:
    """Edges of `mask` that lie on a cycle of the spanning subgraph."""
    sub: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i in mask_indices(mask):
        u, v = g.edges[i]
        sub[u].append((v, i))
        sub[v].append((u, i))

    disc = [-1] * g.n
    low = [0] * g.n
    bridge_mask = 0
    timer = 0

    # iterative lowpoint DFS; parallel edges cannot occur in a simple graph
    for root in range(g.n):
        if disc[root] != -1:
            continue
        stack = [(root, -1, iter(sub[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, pedge, it = stack[-1]
            advanced = False
            for w, i in it:
                if i == pedge:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, i, iter(sub[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        bridge_mask |= 1 << pedge
    return mask & ~bridge_mask


def enumerate_cycles(g: Graph, max_len: int, budget: int = DEFAULT_CYCLE_BUDGET) -> list[Cycle]:
    """All simple cycles of length <= max_len, each once, in canonical form.

    Raises BudgetExceededError if more than `budget` cycles would be listed.
    """
    if max_len < 3:
        raise ValueError("max_len must be >= 3")
    out: list[tuple[int, ...]] = []
    adj = g.adj
    seen = [False] * g.n

    def extend(path: list[int]) -> None:
        if len(path) == max_len:
            closing_only = True
        else:
            closing_only = False
        last = path[-1]
        first = path[0]
        for w in adj[last]:
            if w == first and len(path) >= 3:
                if path[1] < path[-1]:
                    if len(out) >= budget:
                        raise BudgetExceededError(
                            f"more than {budget} cycles", budget=budget
                        )
                    out.append(tuple(path))
            elif not closing_only and w > first and not seen[w]:
                seen[w] = True
                path.append(w)
                extend(path)
                path.pop()
                seen[w] = False

    for s in range(g.n):
        seen[s] = True
        extend([s])
        seen[s] = False
    out.sort(key=lambda c: (len(c), c))
    return [Cycle(c) for c in out]


class SpanningTreeStream:
    """Single-consumer stream of spanning trees (edge masks).

    Yields at most `budget` trees; `truncated` is set once iteration stops
    early because more trees exist.
    """

    def __init__(self, g: Graph, budget: int, forced: int = 0):
        self.truncated = False
        self.count = 0
        self._gen = self._run(g, budget, forced)

    def __iter__(self):
        return self._gen

    def _run(self, g: Graph, budget: int, forced: int):
        inner = _tree_rec(g, forced)
        for tree in inner:
            if self.count >= budget:
                self.truncated = True
                inner.close()
                return
            self.count += 1
            yield tree


def _tree_rec(g: Graph, forced: int):
    n = g.n
    edges = g.edges
    ne = len(edges)

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def connectable(parent: list[int], idx: int) -> bool:
        # can the remaining edges edges[idx:] still make parent one component?
        p = parent.copy()
        comps = len({find(p, v) for v in range(n)})
        for j in range(idx, ne):
            u, v = edges[j]
            ru, rv = find(p, u), find(p, v)
            if ru != rv:
                p[ru] = rv
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def rec(parent: list[int], idx: int, chosen: int, need: int):
        if need == 0:
            if forced >> idx == 0:  # no forced edge may be left out
                yield chosen
            return
        if ne - idx < need:
            return
        u, v = edges[idx]
        ru, rv = find(parent, u), find(parent, v)
        if ru == rv:
            if not forced >> idx & 1:
                yield from rec(parent, idx + 1, chosen, need)
            return
        p2 = parent.copy()
        p2[ru] = rv
        yield from rec(p2, idx + 1, chosen | (1 << idx), need - 1)
        if not forced >> idx & 1 and connectable(parent, idx + 1):
            yield from rec(parent, idx + 1, chosen, need)

    return rec(list(range(n)), 0, 0, n - 1)


def spanning_trees(g: Graph, budget: int = DEFAULT_TREE_BUDGET, forced: int = 0) -> SpanningTreeStream:
    """Stream the distinct spanning trees of a connected graph.

    `forced` is an edge mask every yielded tree must contain; if those edges
    already close a cycle the stream is empty.
    """
    if g.n == 0 or component_count(g, g.full_mask()) != 1:
        raise ValueError("graph must be connected")
    return SpanningTreeStream(g, budget, forced)


def bfs_tree(g: Graph, root: int = 0) -> int:
    """Edge mask of the BFS spanning tree from `root` (vertex-order ties)."""
    seen = [False] * g.n
    seen[root] = True
    mask = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if not seen[w]:
                seen[w] = True
                mask |= 1 << g.edge_index(v, w)
                queue.append(w)
    if not all(seen):
        raise ValueError("graph must be connected")
    return mask
