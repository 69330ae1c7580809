"""Neighborhood polynomials of chordal graphs via anchor sets."""

from nbhdpoly.chordal import NotChordal, find_peo, is_peo, lex_bfs
from nbhdpoly.engine import ComputationResult, NotChordalError, anchor_width, compute
from nbhdpoly.graph import Graph, parse_edge_list
from nbhdpoly.poly import Polynomial

__all__ = [
    "ComputationResult",
    "Graph",
    "NotChordal",
    "NotChordalError",
    "Polynomial",
    "anchor_width",
    "compute",
    "find_peo",
    "is_peo",
    "lex_bfs",
    "parse_edge_list",
]
