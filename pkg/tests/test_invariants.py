import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from piszeged.enumeration import generate_graphs
from piszeged.graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    is_bipartite,
    is_tree,
    path_graph,
    star_graph,
)
from piszeged.invariants import (
    EdgeEdgeSplit,
    EdgeVertexSplit,
    compute_invariants,
    edge_split,
    is_distance_balanced,
    vertex_split,
)

from conftest import from_nx
from oracles import naive_edge_split, naive_invariants, naive_vertex_split


def _vs(g, e):
    s = vertex_split(g, e)
    return s.nu, s.nv, s.eq


def _es(g, e):
    s = edge_split(g, e)
    return s.mu, s.mv, s.eq


def test_vertex_split_examples(named):
    c5 = cycle_graph(5)
    assert all(vertex_split(c5, e) == EdgeVertexSplit(2, 2, 1, 0) for e in c5.edges)
    for n in range(2, 7):
        k = complete_graph(n)
        assert all(_vs(k, e) == (1, 1, n - 2) for e in k.edges)
    # bull: triangle 0-1-2, pendants 3-0, 4-1; edge t1t3 is (0, 2)
    s = vertex_split(named["bull"], (0, 2))
    assert (s.nu, s.nv, s.eq) == (2, 1, 2)
    assert _vs(named["bull"], (2, 0)) == (1, 2, 2)


def test_edge_split_examples():
    c4 = cycle_graph(4)
    assert all(edge_split(c4, e) == EdgeEdgeSplit(1, 1, 1) for e in c4.edges)
    assert edge_split(star_graph(3), (0, 1)) == EdgeEdgeSplit(2, 0, 0)
    c5 = cycle_graph(5)
    assert all(edge_split(c5, e) == EdgeEdgeSplit(2, 2, 0) for e in c5.edges)


def test_split_errors():
    with pytest.raises(GraphError):
        vertex_split(path_graph(4), (0, 2))
    with pytest.raises(DisconnectedGraphError):
        vertex_split(Graph(3, [(0, 1)]), (0, 1))
    with pytest.raises(DisconnectedGraphError):
        compute_invariants(Graph(4, [(0, 1), (2, 3)]))


def test_compute_examples():
    p4 = compute_invariants(path_graph(4)).as_dict()
    assert p4 == dict(wiener=10, pi=6, vertex_pi=12, szeged=10, edge_szeged=1, zagreb1=10,
                      zagreb2=8, triangles=0, diameter=3, min_degree=1)
    k4 = compute_invariants(complete_graph(4))
    assert (k4.vertex_pi, k4.szeged, k4.pi, k4.edge_szeged, k4.zagreb1, k4.zagreb2, k4.triangles) == (
        12, 6, 24, 24, 36, 54, 4)
    c5 = compute_invariants(cycle_graph(5))
    assert (c5.wiener, c5.pi, c5.vertex_pi, c5.szeged, c5.edge_szeged, c5.zagreb1, c5.zagreb2,
            c5.triangles) == (15, 20, 20, 20, 20, 20, 20, 0)


def test_single_vertex():
    inv = compute_invariants(Graph(1))
    assert inv.as_dict() == dict(wiener=0, pi=0, vertex_pi=0, szeged=0, edge_szeged=0, zagreb1=0,
                                 zagreb2=0, triangles=0, diameter=0, min_degree=0)


def test_distance_balanced(named):
    assert is_distance_balanced(named["c4"])
    assert is_distance_balanced(named["petersen"])
    assert not is_distance_balanced(named["bull"])
    assert _vs(named["bull"], (0, 3))[:2] == (4, 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_matches_naive_oracle_exhaustively(n):
    for g in generate_graphs(n, connected=True):
        assert compute_invariants(g).as_dict() == naive_invariants(g.n, list(g.edges))


def test_splits_match_naive_oracle_on_named(named):
    for g in named.values():
        for e in g.edges:
            assert _vs(g, e) == naive_vertex_split(g.n, list(g.edges), e)
            assert _es(g, e) == naive_edge_split(g.n, list(g.edges), e)


def test_wiener_against_networkx(named):
    for g in named.values():
        G = nx.Graph(list(g.edges))
        G.add_nodes_from(range(g.n))
        assert compute_invariants(g).wiener == int(nx.wiener_index(G))


def free_trees(n):
    if n == 1:
        return [Graph(1)]
    return [from_nx(T) for T in nx.nonisomorphic_trees(n)]


def test_trees_wiener_equals_szeged():
    counts = []
    for n in range(1, 10):
        trees = free_trees(n)
        counts.append(len(trees))
        for g in trees:
            assert is_tree(g)
            inv = compute_invariants(g)
            assert inv.wiener == inv.szeged
    assert counts == [1, 1, 1, 2, 3, 6, 11, 23, 47]


def test_bipartite_vertex_pi_is_nm():
    for n in range(2, 8):
        for g in generate_graphs(n, connected=True, bipartite=True):
            assert compute_invariants(g).vertex_pi == g.n * g.m
            assert all(vertex_split(g, e).eq == 0 for e in g.edges)


def test_vertex_pi_zagreb_bound():
    for n in range(2, 8):
        for g in generate_graphs(n, connected=True):
            inv = compute_invariants(g)
            if inv.diameter == 2:
                assert inv.vertex_pi == inv.zagreb1 - 6 * inv.triangles
            assert inv.vertex_pi >= inv.zagreb1 - 6 * inv.triangles


def test_bipartite_distance_balanced_iff_szeged_peak():
    for n in range(2, 8):
        for g in generate_graphs(n, connected=True, bipartite=True):
            inv = compute_invariants(g)
            assert is_distance_balanced(g) == (4 * inv.szeged == g.n * g.n * g.m)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 14), st.floats(0.15, 0.9), st.integers(0, 10**6))
def test_random_graphs_against_oracle(n, p, seed):
    G = nx.gnp_random_graph(n, p, seed=seed)
    if not nx.is_connected(G):
        return
    g = from_nx(G)
    assert compute_invariants(g).as_dict() == naive_invariants(g.n, list(g.edges))
    if is_bipartite(g):
        assert compute_invariants(g).vertex_pi == g.n * g.m
