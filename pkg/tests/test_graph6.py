import networkx as nx
import pytest
from hypothesis import given, strategies as st

from piszeged.graph import Graph, GraphError, complete_graph
from piszeged.graph6 import Graph6Error, bits_to_graph6, parse_graph6, read_graph6, write_graph6
from piszeged.enumeration import generate_graphs

from oracles import encode_graph6


def test_examples():
    assert write_graph6(Graph(1)) == "@"
    assert write_graph6(Graph(0)) == "?"
    assert parse_graph6("C~") == complete_graph(4)
    assert write_graph6(parse_graph6("D?{")) == "D?{"
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert write_graph6(c4) == encode_graph6(4, c4.edges) == "Cl"


def test_b_underscore_is_a_valid_three_vertex_graph():
    # 'B' is order 3; '_' = 0b100000 sets only the (0,1) bit, padding is zero.
    assert encode_graph6(3, [(0, 1)]) == "B_"
    assert parse_graph6("B_") == Graph(3, [(0, 1)])


@pytest.mark.parametrize("text,offset", [
    ("", 0),
    ("C", 1),        # missing data byte
    ("C~~", 2),      # one byte too many
    ("B`", 1),       # padding bit set
    ("C\x7f", 1),    # outside 63..126
    ("C ", 1),
    ("~??", 3),      # truncated long header
])
def test_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6Error) as exc:
        parse_graph6(text)
    assert exc.value.offset == offset


def test_header_and_newline_accepted():
    assert parse_graph6(">>graph6<<C~\n") == complete_graph(4)


def test_long_form_order():
    g = Graph(63, [(0, 62)])
    text = nx.to_graph6_bytes(nx.Graph([(0, 62)] + [(i, i) for i in range(0)]), header=False)
    G = nx.empty_graph(63)
    G.add_edge(0, 62)
    text = nx.to_graph6_bytes(G, header=False).decode().strip()
    assert parse_graph6(text) == g
    with pytest.raises(GraphError):
        write_graph6(g)


def test_bits_to_graph6_matches_writer():
    g = Graph(5, [(0, 2), (1, 4), (3, 4)])
    bits = int("".join("1" if g.has_edge(i, j) else "0" for j in range(1, 5) for i in range(j)), 2)
    assert bits_to_graph6(5, bits).decode() == write_graph6(g)


def test_read_stream_skips_blank_and_header():
    lines = [">>graph6<<\n", "\n", "@\n", "A_\n"]
    assert [g.n for g in read_graph6(lines)] == [1, 2]


def test_round_trip_all_graphs_up_to_seven():
    for n in range(1, 8):
        for g in generate_graphs(n):
            text = write_graph6(g)
            assert text == encode_graph6(g.n, g.edges)
            h = parse_graph6(text)
            assert h == g and write_graph6(h) == text


@st.composite
def graphs(draw, max_n=20):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@given(graphs())
def test_round_trip_against_networkx(g):
    G = nx.empty_graph(g.n)
    G.add_edges_from(g.edges)
    ref = nx.to_graph6_bytes(G, header=False).decode().strip()
    assert write_graph6(g) == ref
    assert parse_graph6(ref) == g
