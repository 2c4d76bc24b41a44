"""Orderly generation of connected regular graphs.

Adjacency matrices are filled one row at a time.  A row may only put its
ones at the front of each block of later vertices that share the same
adjacency to the rows above, which keeps every partial matrix cell-sorted.
After each row the partial matrix is dropped if a relabelling of its known
vertices already gives a larger code (``canon.find_larger_relabelling``),
and a complete matrix is kept only if it is the lexicographically largest
member of its isomorphism class.  Each class is therefore produced exactly
once, already in canonical form.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Optional

from .canon import GREATER, NOT_GREATER, find_larger_relabelling
from .graph import RegularGraph

log = logging.getLogger(__name__)

# Node budget for the partial canonicity test.  Giving up only weakens pruning.
PARTIAL_BUDGET = 400
# Rows fixed before the search tree is split into independent tasks.
SPLIT_ROWS = 3


def _graphical(seq: list[int]) -> bool:
    """Erdős–Gallai test for a degree sequence of a simple graph."""
    if sum(seq) % 2:
        return False
    d = sorted(seq, reverse=True)
    n = len(d)
    if n and d[0] > n - 1:
        return False
    total = 0
    for k in range(1, n + 1):
        total += d[k - 1]
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if total > rhs:
            return False
    return True


def _check_params(v: int, delta: int) -> None:
    if not isinstance(v, int) or v < 3:
        raise ValueError(f"v must be an integer >= 3, got {v!r}")
    if not isinstance(delta, int) or not 1 <= delta <= v - 1:
        raise ValueError(f"delta must satisfy 1 <= delta <= v - 1, got {delta!r}")


class _Search:
    def __init__(self, v: int, delta: int, partial_budget: Optional[int] = PARTIAL_BUDGET):
        self.v = v
        self.delta = delta
        self.partial_budget = partial_budget
        self.adj = [0] * v
        self.deg = [0] * v
        self.found: list[RegularGraph] = []
        self.nodes = 0

    def _blocks(self, i: int) -> list[tuple[int, int]]:
        """Runs (start, size) of later vertices with identical adjacency to rows < i."""
        v = self.v
        out = []
        j = i + 1
        while j < v:
            key = self.adj[j]
            k = j + 1
            while k < v and self.adj[k] == key:
                k += 1
            out.append((j, k - j))
            j = k
        return out

    def _row_choices(self, i: int) -> Iterator[list[tuple[int, int]]]:
        """All ways to put the missing ones of row i at the front of each block."""
        need = self.delta - self.deg[i]
        blocks = [(s, n if self.deg[s] < self.delta else 0) for s, n in self._blocks(i)]
        caps = [c for _, c in blocks]
        suffix = [0] * (len(blocks) + 1)
        for t in range(len(blocks) - 1, -1, -1):
            suffix[t] = suffix[t + 1] + caps[t]
        chosen: list[tuple[int, int]] = []

        def rec(t: int, left: int):
            if left == 0:
                yield list(chosen)
                return
            if t == len(blocks) or suffix[t] < left:
                return
            start, cap = blocks[t]
            for c in range(min(cap, left), -1, -1):
                if c:
                    chosen.append((start, c))
                yield from rec(t + 1, left - c)
                if c:
                    chosen.pop()

        yield from rec(0, need)

    def _apply(self, i: int, choice: list[tuple[int, int]], sign: int) -> None:
        adj, deg = self.adj, self.deg
        for start, c in choice:
            for j in range(start, start + c):
                if sign > 0:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                else:
                    adj[i] &= ~(1 << j)
                    adj[j] &= ~(1 << i)
                deg[i] += sign
                deg[j] += sign

    def _acceptable(self, i: int) -> bool:
        """Checks after row i is complete."""
        v, delta = self.v, self.delta
        nxt = i + 1
        if nxt < v and not self.adj[nxt] & ((1 << nxt) - 1):
            return False
        if not _graphical([delta - self.deg[j] for j in range(nxt, v)]):
            return False
        if nxt < v - 1:
            res = find_larger_relabelling(self.adj, v, depth=nxt, known=nxt, budget=self.partial_budget)
            return res != GREATER
        return True

    def run(self, i: int = 0, stop_row: Optional[int] = None, prefixes: Optional[list] = None) -> None:
        v = self.v
        if stop_row is not None and i == stop_row:
            prefixes.append((list(self.adj), list(self.deg)))
            return
        if i == v - 1:
            if self.deg[i] != self.delta:
                return
            if find_larger_relabelling(self.adj, v) == NOT_GREATER:
                self.found.append(RegularGraph._trusted(list(self.adj), self.delta))
            return
        for choice in self._row_choices(i):
            self.nodes += 1
            self._apply(i, choice, +1)
            if self._acceptable(i):
                self.run(i + 1, stop_row, prefixes)
            self._apply(i, choice, -1)


def _continue_from(args) -> list[bytes]:
    v, delta, start_row, adj, deg, budget = args
    s = _Search(v, delta, budget)
    s.adj, s.deg = list(adj), list(deg)
    s.run(start_row)
    return [g.certificate for g in s.found]


def enumerate_regular(
    v: int,
    delta: int,
    workers: int = 1,
    partial_budget: Optional[int] = PARTIAL_BUDGET,
) -> list[RegularGraph]:
    """One representative per isomorphism class of connected delta-regular graphs on v vertices.

    The list is sorted by ascending certificate; it is empty when v*delta is
    odd.  The result does not depend on ``workers``.
    """
    _check_params(v, delta)
    if (v * delta) % 2:
        return []
    if workers <= 1 or v <= SPLIT_ROWS + 2:
        s = _Search(v, delta, partial_budget)
        s.run()
        found = s.found
        log.debug("v=%d delta=%d: %d graphs, %d row choices", v, delta, len(found), s.nodes)
    else:
        s = _Search(v, delta, partial_budget)
        prefixes: list = []
        s.run(0, SPLIT_ROWS, prefixes)
        tasks = [(v, delta, SPLIT_ROWS, adj, deg, partial_budget) for adj, deg in prefixes]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            certs = [c for chunk in pool.map(_continue_from, tasks) for c in chunk]
        found = [RegularGraph.from_certificate(c) for c in certs]
    found.sort(key=lambda g: g.certificate)
    return found


def iter_regular(v: int, delta: int, workers: int = 1) -> Iterator[RegularGraph]:
    """Streaming view of ``enumerate_regular`` (same deterministic order)."""
    yield from enumerate_regular(v, delta, workers)
