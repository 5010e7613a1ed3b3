"""Simple undirected graphs on at most 64 vertices.

Adjacency is stored as one integer bit row per vertex, so neighbourhood
intersections and BFS frontiers are word operations.  Graphs are immutable
and hashable; every derived quantity is a pure function of the graph.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64

# Distance sentinel for vertex pairs in different components.
UNREACHABLE = -1

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or an operation outside its domain."""


class DisconnectedGraphError(GraphError):
    """A distance-based operation was asked to work on a disconnected graph."""


class Graph:
    """Immutable simple graph with vertices ``0..n-1``."""

    __slots__ = ("n", "rows", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if rows[u] >> v & 1:
                raise GraphError(f"repeated edge {u}-{v}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)
        self._edges = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from adjacency bit rows.  The rows must be symmetric and loop-free."""
        n = len(rows)
        if n > MAX_ORDER:
            raise GraphError(f"order {n} exceeds {MAX_ORDER}")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r >> v & 1 or r & ~full:
                raise GraphError(f"row {v} has a loop or an out-of-range bit")
            w = r
            while w:
                low = w & -w
                if not rows[low.bit_length() - 1] >> v & 1:
                    raise GraphError("adjacency rows are not symmetric")
                w ^= low
        g = cls.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        g._edges = None
        return g

    @classmethod
    def _trusted(cls, rows: tuple[int, ...]) -> "Graph":
        # rows already known to be a valid adjacency (enumeration hot path)
        g = cls.__new__(cls)
        g.n = len(rows)
        g.rows = rows
        g._edges = None
        return g

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled in the order given."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for w in bits(self.rows[v]):
                if w in index:
                    r |= 1 << index[w]
            rows.append(r)
        return Graph.from_rows(rows)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            nr = 0
            for w in bits(r):
                nr |= 1 << perm[w]
            rows[perm[v]] = nr
        return Graph.from_rows(rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Named constructors

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


# ---------------------------------------------------------------------------
# Distances

def bfs_layers(g: Graph, source: int) -> list[int]:
    """Distance layers from ``source`` as bit masks; ``layers[k]`` holds distance ``k``."""
    rows = g.rows
    seen = frontier = 1 << source
    layers = [frontier]
    while True:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; :data:`UNREACHABLE` for other components."""
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} outside 0..{g.n - 1}")
    row = [UNREACHABLE] * g.n
    for k, layer in enumerate(bfs_layers(g, source)):
        for v in bits(layer):
            row[v] = k
    return row


def distance_table(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 0
    for layer in bfs_layers(g, 0):
        seen |= layer
    return seen == (1 << g.n) - 1


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")


def eccentricity(g: Graph, v: int) -> int:
    return len(bfs_layers(g, v)) - 1


def diameter(g: Graph) -> int:
    require_connected(g)
    return max((eccentricity(g, v) for v in range(g.n)), default=0)


def is_bipartite(g: Graph) -> bool:
    """BFS 2-colouring; a graph is bipartite iff no layer contains an edge."""
    unseen = (1 << g.n) - 1
    while unseen:
        s = (unseen & -unseen).bit_length() - 1
        layers = bfs_layers(g, s)
        for layer in layers:
            for v in bits(layer):
                if g.rows[v] & layer:
                    return False
            unseen &= ~layer
    return True


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_complete_multipartite(g: Graph) -> bool:
    """True iff non-adjacency is an equivalence relation (complement is a union of cliques)."""
    full = (1 << g.n) - 1
    for v in range(g.n):
        part = full & ~g.rows[v]
        for w in bits(part):
            if full & ~g.rows[w] != part:
                return False
    return True


# ---------------------------------------------------------------------------
# Triangles

def triangles_per_edge(g: Graph, e: Sequence[int]) -> int:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    return (g.rows[u] & g.rows[v]).bit_count()


def triangles_total(g: Graph) -> int:
    rows = g.rows
    total = sum((rows[u] & rows[v]).bit_count() for u, v in g.edges)
    return total // 3


# ---------------------------------------------------------------------------
# Induced patterns

P4 = "P4"
C4 = "C4"
C3_PRIME = "C3_PRIME"
ODD_HOLE = "ODD_HOLE"
PATTERNS = (P4, C4, C3_PRIME, ODD_HOLE)

# Four-vertex patterns are determined by their sorted degree sequence.
_FOUR_VERTEX_DEGREES = {
    P4: (1, 1, 2, 2),
    C4: (2, 2, 2, 2),
    C3_PRIME: (1, 2, 2, 3),
}


def has_induced(g: Graph, pattern: str) -> bool:
    """Whether ``g`` has an induced P4, C4, C3' (paw) or odd hole (odd cycle of length >= 5)."""
    if pattern == ODD_HOLE:
        return _has_odd_hole(g)
    try:
        target = _FOUR_VERTEX_DEGREES[pattern]
    except KeyError:
        raise GraphError(f"unknown pattern {pattern!r}") from None
    rows = g.rows
    for quad in combinations(range(g.n), 4):
        mask = sum(1 << v for v in quad)
        if tuple(sorted((rows[v] & mask).bit_count() for v in quad)) == target:
            return True
    return False


def _has_odd_hole(g: Graph) -> bool:
    # Grow chordless paths from their smallest vertex s and report a hole
    # when a path of even vertex count >= 4 closes back to s without a chord.
    rows = g.rows

    def grow(s: int, inner: int, last: int, length: int) -> bool:
        above = ~((1 << (s + 1)) - 1)
        for w in bits(rows[last] & above & ~inner):
            if rows[w] & inner:
                continue
            if rows[w] >> s & 1:
                if length >= 4 and length % 2 == 0:
                    return True
                continue
            if grow(s, inner | (1 << last), w, length + 1):
                return True
        return False

    for s in range(g.n):
        for a in bits(rows[s] >> (s + 1) << (s + 1)):
            if grow(s, 0, a, 2):
                return True
    return False
