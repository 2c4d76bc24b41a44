"""Isomorph-free enumeration of connected regular graphs, canonical labelling and graph I/O."""

from .canon import canonical_certificate
from .generate import enumerate_regular, iter_regular
from .graph import RegularGraph, adjacency_from_edges, edges_of, is_connected

__all__ = [
    "RegularGraph",
    "adjacency_from_edges",
    "canonical_certificate",
    "edges_of",
    "enumerate_regular",
    "is_connected",
    "iter_regular",
]
