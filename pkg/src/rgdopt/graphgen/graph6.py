"""graph6 encoding and the plain adjacency-list text format.

graph6 packs the upper triangle column by column (x(0,1), x(0,2), x(1,2),
x(0,3), ...) into 6-bit groups offset by 63, after a size prefix N(n).
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, Sequence, TextIO, Union

from .graph import adjacency_from_edges

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise Graph6Error("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error("graph too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """(n, number of bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def encode_graph6(adj: Sequence[int]) -> str:
    """graph6 string (no header, no newline) for bitmask adjacency rows."""
    n = len(adj)
    out = bytearray(_encode_n(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | ((adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def decode_graph6(line: Union[str, bytes]) -> list[int]:
    """Bitmask adjacency rows from one graph6 string."""
    if isinstance(line, str):
        line = line.encode("ascii")
    line = line.strip()
    if line.startswith(HEADER.encode()):
        line = line[len(HEADER):]
    if any(b < 63 or b > 126 for b in line):
        raise Graph6Error("byte outside the graph6 range 63..126")
    n, pos = _decode_n(line)
    body = line[pos:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return adj


def read_graph6(source: Union[str, Path, TextIO]) -> Iterator[list[int]]:
    """Graphs from a graph6 file; blank lines and lines starting with '#' are skipped."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="ascii") as fh:
            yield from read_graph6(fh)
        return
    for raw in source:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield decode_graph6(line)


def write_graph6(graphs: Iterable[Sequence[int]], dest: Union[str, Path, TextIO], header: bool = False) -> int:
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="ascii") as fh:
            return write_graph6(graphs, fh, header)
    count = 0
    for adj in graphs:
        prefix = HEADER if header and count == 0 else ""
        dest.write(prefix + encode_graph6(adj) + "\n")
        count += 1
    return count


def format_adjacency_list(adj: Sequence[int]) -> str:
    """One line per vertex, ``i: j k l``, 1-based."""
    lines = []
    for i, row in enumerate(adj):
        nbrs = [str(j + 1) for j in range(len(adj)) if (row >> j) & 1]
        lines.append(f"{i + 1}: " + " ".join(nbrs) if nbrs else f"{i + 1}:")
    return "\n".join(lines) + "\n"


def parse_adjacency_list(text: str) -> list[int]:
    """Inverse of ``format_adjacency_list``; adjacency must be symmetric."""
    entries: dict[int, list[int]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, tail = line.partition(":")
        if not _:
            raise ValueError(f"missing ':' in adjacency line {raw!r}")
        i = int(head)
        entries[i] = [int(t) for t in tail.split()]
    n = max(entries) if entries else 0
    if sorted(entries) != list(range(1, n + 1)):
        raise ValueError("adjacency list must have exactly one line per vertex 1..n")
    edges = set()
    for i, nbrs in entries.items():
        for j in nbrs:
            if i not in entries.get(j, []):
                raise ValueError(f"edge {i}-{j} is listed only one way")
            edges.add((min(i, j) - 1, max(i, j) - 1))
    return adjacency_from_edges(n, sorted(edges))
