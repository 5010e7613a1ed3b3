"""Per-edge vertex/edge splits and the distance- and degree-based indices.

For an edge ``e = uv`` the vertex split counts vertices strictly closer to
``u`` (``nu``), strictly closer to ``v`` (``nv``) and equidistant (``eq``).
The edge split does the same for the other edges of the graph, the distance
from an edge ``xy`` to a vertex ``w`` being ``min(d(x, w), d(y, w))``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from .graph import Graph, GraphError, bfs_layers, bits, require_connected


@dataclass(frozen=True)
class EdgeVertexSplit:
    nu: int
    nv: int
    eq: int
    te: int


@dataclass(frozen=True)
class EdgeEdgeSplit:
    mu: int
    mv: int
    eq: int


@dataclass(frozen=True)
class InvariantVector:
    wiener: int
    pi: int
    vertex_pi: int
    szeged: int
    edge_szeged: int
    zagreb1: int
    zagreb2: int
    triangles: int
    diameter: int
    min_degree: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class GraphProfile:
    """Everything the theorem checks need, computed from one BFS per vertex."""

    graph: Graph
    invariants: InvariantVector
    vertex_splits: tuple[EdgeVertexSplit, ...]  # aligned with graph.edges
    edge_splits: tuple[EdgeEdgeSplit, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m


def _check_edge(g: Graph, e: Sequence[int]) -> tuple[int, int]:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    return u, v


def _closer_count(lu: list[int], lv: list[int]) -> int:
    # vertices w with d(u, w) = k and d(v, w) = k + 1, summed over k
    return sum((a & b).bit_count() for a, b in zip(lu, lv[1:]))


def _distance_rows(g: Graph, layers: list[list[int]]) -> list[list[int]]:
    dist = []
    for ls in layers:
        row = [0] * g.n
        for k, layer in enumerate(ls):
            for w in bits(layer):
                row[w] = k
        dist.append(row)
    return dist


def _edge_distance_columns(g: Graph, dist: list[list[int]]) -> list[list[int]]:
    # cols[w][f] = distance from vertex w to edge f
    return [[min(row[x], row[y]) for x, y in g.edges] for row in dist]


def _vertex_split(g: Graph, layers, u: int, v: int) -> EdgeVertexSplit:
    nu = _closer_count(layers[u], layers[v])
    nv = _closer_count(layers[v], layers[u])
    return EdgeVertexSplit(nu, nv, g.n - nu - nv, (g.rows[u] & g.rows[v]).bit_count())


def _edge_split(m: int, cols: list[list[int]], u: int, v: int) -> EdgeEdgeSplit:
    mu = mv = 0
    for a, b in zip(cols[u], cols[v]):
        if a < b:
            mu += 1
        elif b < a:
            mv += 1
    # the edge itself is at distance 0 from both ends
    return EdgeEdgeSplit(mu, mv, m - 1 - mu - mv)


def vertex_split(g: Graph, e: Sequence[int]) -> EdgeVertexSplit:
    """``(nu, nv, eq, t(e))`` for the edge ``e = (u, v)``, oriented as given."""
    require_connected(g)
    u, v = _check_edge(g, e)
    return _vertex_split(g, {u: bfs_layers(g, u), v: bfs_layers(g, v)}, u, v)


def edge_split(g: Graph, e: Sequence[int]) -> EdgeEdgeSplit:
    """``(mu, mv, eq)`` for the edge ``e = (u, v)``; ``e`` itself is not counted."""
    require_connected(g)
    u, v = _check_edge(g, e)
    layers = [bfs_layers(g, s) for s in range(g.n)]
    cols = _edge_distance_columns(g, _distance_rows(g, layers))
    return _edge_split(g.m, cols, u, v)


def profile(g: Graph) -> GraphProfile:
    if g.n == 0:
        raise GraphError("the null graph has no invariants")
    require_connected(g)
    n, m = g.n, g.m
    layers = [bfs_layers(g, s) for s in range(n)]
    dist = _distance_rows(g, layers)
    cols = _edge_distance_columns(g, dist)
    degs = g.degrees()

    vsplits = []
    esplits = []
    pi = vertex_pi = sz = sze = m2 = te_sum = 0
    for u, v in g.edges:
        vs = _vertex_split(g, layers, u, v)
        es = _edge_split(m, cols, u, v)
        vsplits.append(vs)
        esplits.append(es)
        vertex_pi += vs.nu + vs.nv
        sz += vs.nu * vs.nv
        pi += es.mu + es.mv
        sze += es.mu * es.mv
        m2 += degs[u] * degs[v]
        te_sum += vs.te

    wiener = sum(k * layer.bit_count() for ls in layers for k, layer in enumerate(ls)) // 2
    inv = InvariantVector(
        wiener=wiener,
        pi=pi,
        vertex_pi=vertex_pi,
        szeged=sz,
        edge_szeged=sze,
        zagreb1=sum(d * d for d in degs),
        zagreb2=m2,
        triangles=te_sum // 3,
        diameter=max(len(ls) for ls in layers) - 1,
        min_degree=min(degs),
    )
    return GraphProfile(g, inv, tuple(vsplits), tuple(esplits))


def compute_invariants(g: Graph) -> InvariantVector:
    return profile(g).invariants


def is_distance_balanced(g: Graph) -> bool:
    """True iff ``nu == nv`` for every edge."""
    return all(s.nu == s.nv for s in profile(g).vertex_splits)
