import sys
from pathlib import Path

import networkx as nx
import pytest

from piszeged.graph import Graph
from piszeged.graph6 import parse_graph6

sys.path.insert(0, str(Path(__file__).parent))

# Named fixtures, frozen from networkx's graph6 writer.
NAMED = {
    "petersen": "IheA@GUAo",
    "octahedron": "E}lw",
    "k33": "EFz_",
    "bull": "D{O",  # triangle 0-1-2, pendants 3-0 and 4-1
    "c4": "Cl",
    "c5": "Dhc",
    "c6": "EhEG",
    "p3": "Bg",
    "p4": "Ch",
    "k1": "@",
    "k2": "A_",
    "k4": "C~",
    "star3": "Cs",
    "star4": "Ds_",
    "paw": "C{",
    "bowtie": "D{c",
    "k23": "D]o",
    "wheel5": "D|s",
}


@pytest.fixture(scope="session")
def named():
    return {k: parse_graph6(v) for k, v in NAMED.items()}


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def from_nx(G: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(G.nodes())}
    return Graph(len(index), ((index[u], index[v]) for u, v in G.edges()))


def pytest_terminal_summary(terminalreporter):
    lines = [
        value
        for key in ("passed", "failed")
        for rep in terminalreporter.stats.get(key, [])
        if rep.when == "call"
        for name, value in rep.user_properties
        if name == "acceptance"
    ]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
