"""Canonical labelling by lexicographically maximal adjacency code.

The code of a labelled graph is its strict upper triangle read row by row.
The canonical form of a graph is the relabelling with the largest code.  A
relabelling is built one position at a time: after vertices w_0..w_{p-1} are
placed, the unplaced vertices form an ordered partition keyed by their
adjacency to the placed ones, and w_p must come from the first cell.  With
the earlier rows equal, the row contributed by w_p is fully described by how
many of its neighbours fall in each cell, so rows compare as count tuples.

Two searches share that machinery:

* ``canonical_perm`` finds a maximising relabelling (the certificate);
* ``find_larger_relabelling`` decides whether some relabelling beats a given
  labelled graph, optionally looking only at the first few rows and only at
  vertices whose rows are already known.  Orderly generation uses the
  partial version to prune and the full version as the final test.

Both prune with automorphisms found at leaves: candidates in one orbit of the
pointwise stabiliser of the current prefix lead to equivalent subtrees, and a
leaf equivalent to the reference path sends the search straight back to the
level where it left that path.
"""

from __future__ import annotations

from typing import Optional, Sequence

GREATER = 1
NOT_GREATER = 0
GAVE_UP = -1


class _Jump(Exception):
    def __init__(self, level: int):
        self.level = level


class _Budget(Exception):
    pass


class _Found(Exception):
    pass


def _cells_after(cells: list[int], w: int, nbrs: int) -> tuple[tuple[int, ...], list[int]]:
    """Place w (taken from cells[0]); return its row counts and the refined partition."""
    first = cells[0] & ~(1 << w)
    row = []
    new = []
    if first:
        a = first & nbrs
        row.append(a.bit_count())
        b = first ^ a
        if a:
            new.append(a)
        if b:
            new.append(b)
    for cell in cells[1:]:
        a = cell & nbrs
        row.append(a.bit_count())
        b = cell ^ a
        if a:
            new.append(a)
        if b:
            new.append(b)
    return tuple(row), new


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _orbit_reps(candidates: list[int], gens: list[Sequence[int]], prefix: Sequence[int]) -> dict[int, int]:
    """Map each candidate to a representative of its orbit under the generators fixing ``prefix``."""
    active = [g for g in gens if all(g[u] == u for u in prefix)]
    parent = {c: c for c in candidates}
    if not active:
        return parent

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in active:
        for c in candidates:
            d = g[c]
            if d in parent:
                rc, rd = find(c), find(d)
                if rc != rd:
                    if rc < rd:
                        parent[rd] = rc
                    else:
                        parent[rc] = rd
    return {c: find(c) for c in candidates}


def identity_rows(adj: Sequence[int], n: int, depth: Optional[int] = None) -> list[tuple[int, ...]]:
    """Rows of a cell-sorted labelled graph as count tuples (identity placement)."""
    depth = n if depth is None else depth
    cells = [(1 << n) - 1] if n else []
    rows = []
    for p in range(depth):
        row, cells = _cells_after(cells, p, adj[p])
        rows.append(row)
    return rows


def _is_sorted_labelling(adj: Sequence[int], n: int, depth: int) -> bool:
    """True when, at every step, the refined partition lists vertices in label order."""
    cells = [(1 << n) - 1] if n else []
    for p in range(depth):
        if cells[0] & -cells[0] != 1 << p:
            return False
        _, cells = _cells_after(cells, p, adj[p])
        lowest_next = p + 1
        for cell in cells:
            size = cell.bit_count()
            if cell != ((1 << size) - 1) << lowest_next:
                return False
            lowest_next += size
    return True


def find_larger_relabelling(
    adj: Sequence[int],
    n: int,
    depth: Optional[int] = None,
    known: Optional[int] = None,
    budget: Optional[int] = None,
) -> int:
    """Is there a relabelling whose first ``depth`` rows beat those of ``adj``?

    Only vertices ``< known`` may be placed (their full neighbourhoods must be
    valid); ``adj`` entries between two vertices ``>= known`` are ignored.
    Returns GREATER, NOT_GREATER, or GAVE_UP when ``budget`` nodes were spent.
    With ``depth == known == n`` the answer is exact: NOT_GREATER means the
    labelling is the canonical one.
    """
    depth = n if depth is None else depth
    known = n if known is None else known
    if not _is_sorted_labelling(adj, n, min(depth, known)):
        # a cell-respecting reorder of the known prefix already wins
        return GREATER
    ref = identity_rows(adj, n, depth)
    full = depth == n and known == n
    gens: list[list[int]] = []
    perm = [0] * n
    allowed = (1 << known) - 1
    nodes = [0]

    def dfs(p: int, cells: list[int]) -> None:
        if p == depth:
            if full:
                level = next((i for i in range(n) if perm[i] != i), None)
                if level is not None:
                    gens.append(list(perm))
                    raise _Jump(level)
            return
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise _Budget
        cand = list(_bits(cells[0] & allowed))
        target = ref[p]
        explored: list[int] = []
        reps = None
        n_gens = -1
        for w in cand:
            if full and gens:
                if n_gens != len(gens):
                    reps = _orbit_reps(cand, gens, perm[:p])
                    n_gens = len(gens)
                if any(reps[x] == reps[w] for x in explored):
                    continue
            explored.append(w)
            row, new_cells = _cells_after(cells, w, adj[w])
            if row > target:
                raise _Found
            if row < target:
                continue
            perm[p] = w
            try:
                dfs(p + 1, new_cells)
            except _Jump as j:
                if j.level < p:
                    raise

    try:
        dfs(0, [(1 << n) - 1] if n else [0])
    except _Found:
        return GREATER
    except _Budget:
        return GAVE_UP
    return NOT_GREATER


def canonical_perm(adj: Sequence[int], n: int) -> list[int]:
    """A relabelling (position -> vertex) giving the lexicographically largest code."""
    if n == 0:
        return []
    best_rows: list[tuple[int, ...]] = []
    best_perm: list[int] = []
    gens: list[list[int]] = []
    perm = [0] * n
    rows: list[tuple[int, ...]] = []

    def dfs(p: int, cells: list[int]) -> None:
        nonlocal best_rows, best_perm
        if p == n:
            if not best_perm or rows > best_rows:
                best_rows = list(rows)
                best_perm = list(perm)
                return
            if rows == best_rows:
                gamma = [0] * n
                for i in range(n):
                    gamma[best_perm[i]] = perm[i]
                gens.append(gamma)
                level = next(i for i in range(n) if perm[i] != best_perm[i])
                raise _Jump(level)
            return
        cand = list(_bits(cells[0]))
        explored: list[int] = []
        reps = None
        n_gens = -1
        for w in cand:
            if gens:
                if n_gens != len(gens):
                    reps = _orbit_reps(cand, gens, perm[:p])
                    n_gens = len(gens)
                if any(reps[x] == reps[w] for x in explored):
                    continue
            explored.append(w)
            row, new_cells = _cells_after(cells, w, adj[w])
            if best_perm and row < best_rows[p] and rows[:p] == best_rows[:p]:
                continue
            perm[p] = w
            rows.append(row)
            try:
                dfs(p + 1, new_cells)
            except _Jump as j:
                if j.level < p:
                    rows.pop()
                    raise
            rows.pop()

    dfs(0, [(1 << n) - 1])
    return best_perm


def relabel(adj: Sequence[int], perm: Sequence[int]) -> list[int]:
    """Adjacency masks of the graph whose vertex p is the old vertex perm[p]."""
    n = len(perm)
    pos = [0] * n
    for p, w in enumerate(perm):
        pos[w] = p
    out = []
    for p in range(n):
        m = 0
        for u in _bits(adj[perm[p]]):
            m |= 1 << pos[u]
        out.append(m)
    return out


def code_bytes(adj: Sequence[int], n: int) -> bytes:
    """Vertex count (2 bytes) followed by the packed upper-triangle code."""
    bits = 0
    count = 0
    for i in range(n):
        row = adj[i]
        for j in range(i + 1, n):
            bits = (bits << 1) | ((row >> j) & 1)
            count += 1
    pad = (-count) % 8
    bits <<= pad
    nbytes = (count + pad) // 8
    return n.to_bytes(2, "big") + (bits.to_bytes(nbytes, "big") if nbytes else b"")


def decode_code_bytes(cert: bytes) -> tuple[int, list[int]]:
    """Inverse of ``code_bytes``: (n, adjacency masks)."""
    n = int.from_bytes(cert[:2], "big")
    count = n * (n - 1) // 2
    nbytes = (count + 7) // 8
    if len(cert) != 2 + nbytes:
        raise ValueError("certificate length does not match its vertex count")
    bits = int.from_bytes(cert[2:], "big") if nbytes else 0
    bits >>= (-count) % 8
    adj = [0] * n
    k = count
    for i in range(n):
        for j in range(i + 1, n):
            k -= 1
            if (bits >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return n, adj


def canonical_certificate(adj: Sequence[int], n: Optional[int] = None) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    n = len(adj) if n is None else n
    perm = canonical_perm(adj, n)
    return code_bytes(relabel(adj, perm), n)
