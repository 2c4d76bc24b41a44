"""Connected regular simple graphs and small graph utilities on bitmask adjacency."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..exactmath import IntMatrix
from .canon import canonical_certificate, code_bytes, decode_code_bytes


def adjacency_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Bitmask rows from 0-based edges; rejects loops and repeated edges."""
    adj = [0] * n
    for u, w in edges:
        if u == w:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= w < n):
            raise ValueError(f"edge ({u}, {w}) outside 0..{n - 1}")
        if (adj[u] >> w) & 1:
            raise ValueError(f"repeated edge ({u}, {w})")
        adj[u] |= 1 << w
        adj[w] |= 1 << u
    return adj


def edges_of(adj: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, j) for i in range(len(adj)) for j in range(i + 1, len(adj)) if (adj[i] >> j) & 1]


def is_connected(adj: Sequence[int]) -> bool:
    """True iff a traversal from vertex 0 reaches every vertex."""
    n = len(adj)
    if n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def degrees(adj: Sequence[int]) -> list[int]:
    return [row.bit_count() for row in adj]


@dataclass(frozen=True)
class RegularGraph:
    """A connected delta-regular simple graph with its canonical certificate.

    ``adj`` holds bitmask rows in the canonical labelling, so two instances
    are equal exactly when the graphs are isomorphic.
    """

    v: int
    delta: int
    adj: tuple[int, ...] = field(repr=False)
    certificate: bytes = field(repr=False)

    def __post_init__(self):
        if len(self.adj) != self.v:
            raise ValueError("adjacency size does not match v")
        for i, row in enumerate(self.adj):
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
            if row.bit_count() != self.delta:
                raise ValueError(f"vertex {i} has degree {row.bit_count()}, expected {self.delta}")
            if row >> self.v:
                raise ValueError(f"vertex {i} adjacent to a vertex outside the graph")
        for i in range(self.v):
            for j in range(i):
                if ((self.adj[i] >> j) & 1) != ((self.adj[j] >> i) & 1):
                    raise ValueError("adjacency is not symmetric")
        if not is_connected(self.adj):
            raise ValueError("graph is not connected")

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "RegularGraph":
        """Canonically relabel an arbitrary labelled connected regular graph."""
        n = len(adj)
        cert = canonical_certificate(adj, n)
        return cls.from_certificate(cert)

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[tuple[int, int]]) -> "RegularGraph":
        return cls.from_adjacency(adjacency_from_edges(v, edges))

    @classmethod
    def from_certificate(cls, cert: bytes) -> "RegularGraph":
        n, adj = decode_code_bytes(cert)
        delta = adj[0].bit_count() if n else 0
        return cls(n, delta, tuple(adj), cert)

    @classmethod
    def _trusted(cls, adj: Sequence[int], delta: int) -> "RegularGraph":
        """Wrap an adjacency already known to be canonical, regular and connected."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "v", len(adj))
        object.__setattr__(obj, "delta", delta)
        object.__setattr__(obj, "adj", tuple(adj))
        object.__setattr__(obj, "certificate", code_bytes(adj, len(adj)))
        return obj

    @property
    def cert_hex(self) -> str:
        return self.certificate.hex()

    def edges(self) -> list[tuple[int, int]]:
        return edges_of(self.adj)

    def adjacency_matrix(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.v)] for row in self.adj]

    def laplacian(self) -> IntMatrix:
        """delta*I - T."""
        return IntMatrix(
            [[self.delta if i == j else -((self.adj[i] >> j) & 1) for j in range(self.v)] for i in range(self.v)]
        )

    def __lt__(self, other: "RegularGraph") -> bool:
        return self.certificate < other.certificate
