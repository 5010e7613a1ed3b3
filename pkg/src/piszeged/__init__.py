"""Distance-based topological indices (PI, vertex PI, Szeged, edge Szeged),
Zagreb and Wiener indices, inequality checks with exact equality classes,
and isomorph-free enumeration of small graphs."""

__version__ = "0.1.0"

from .canon import canonical_form, is_isomorphic
from .graph import Graph, GraphError, DisconnectedGraphError
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .invariants import InvariantVector, compute_invariants, edge_split, vertex_split
from .theorems import TheoremVerdict, run_all

__all__ = [
    "Graph", "GraphError", "DisconnectedGraphError", "Graph6Error",
    "parse_graph6", "write_graph6", "canonical_form", "is_isomorphic",
    "InvariantVector", "compute_invariants", "vertex_split", "edge_split",
    "TheoremVerdict", "run_all",
]
