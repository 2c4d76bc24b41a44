"""Block designs with prescribed concurrences: existence search, 2-designs, cyclic development, RGD checks."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .graphgen import RegularGraph, canonical_certificate, is_connected

log = logging.getLogger(__name__)

FOUND = "found"
NONE = "none"
UNDECIDED = "undecided"

DEFAULT_LAMBDA_CAP = 42


class DesignError(ValueError):
    pass


class BlocksParseError(DesignError):
    pass


@dataclass(frozen=True)
class DesignParams:
    v: int
    k: int
    r: int
    b: int
    lam: int
    delta: int
    lambda_tilde: Optional[int] = None

    def x_for(self, y: int) -> int:
        """Concurrence offset x = lambda + y * lambda_tilde after y augmentations."""
        if self.lambda_tilde is None:
            raise DesignError("lambda_tilde unknown")
        return self.lam + y * self.lambda_tilde


def params_for(v: int, k: int, r: int) -> DesignParams:
    if not 2 <= k < v:
        raise DesignError(f"need 2 <= k < v, got v={v}, k={k}")
    if r < 1:
        raise DesignError("replication must be positive")
    if (v * r) % k:
        raise DesignError(f"no equireplicate design possible: v*r = {v * r} is not divisible by k = {k}")
    lam, delta = divmod(r * (k - 1), v - 1)
    return DesignParams(v=v, k=k, r=r, b=v * r // k, lam=lam, delta=delta)


@dataclass(frozen=True)
class BlockDesign:
    """A multiset of blocks over points 1..v; blocks are stored sorted."""

    v: int
    k: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for blk in self.blocks:
            if len(blk) != self.k:
                raise DesignError(f"block {blk} does not have {self.k} points")
            if any(not 1 <= x <= self.v for x in blk):
                raise DesignError(f"block {blk} uses a point outside 1..{self.v}")

    @classmethod
    def from_blocks(cls, v: int, k: int, blocks: Iterable[Iterable[int]]) -> "BlockDesign":
        return cls(v, k, tuple(tuple(sorted(b)) for b in blocks))

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def is_binary(self) -> bool:
        return all(len(set(blk)) == len(blk) for blk in self.blocks)

    def replications(self) -> list[int]:
        r = [0] * self.v
        for blk in self.blocks:
            for x in blk:
                r[x - 1] += 1
        return r

    def concurrence(self) -> list[list[int]]:
        """N N^T: replications on the diagonal (for binary designs), lambda_ij off it."""
        v = self.v
        m = [[0] * v for _ in range(v)]
        for blk in self.blocks:
            for a in blk:
                for c in blk:
                    m[a - 1][c - 1] += 1
        return m

    def sorted_blocks(self) -> list[tuple[int, ...]]:
        return sorted(self.blocks)

    def to_text(self, comment: Optional[str] = None) -> str:
        lines = [f"# {comment}"] if comment else []
        lines += [" ".join(map(str, blk)) for blk in self.blocks]
        return "\n".join(lines) + "\n"


def parse_blocks(text: str, v: Optional[int] = None, k: Optional[int] = None) -> BlockDesign:
    """Blocks file: one block per line, 1-based points, '#' starts a comment line.

    ``k`` defaults to the size of the first block and ``v`` to the largest point.
    """
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            blk = tuple(int(t) for t in line.split())
        except ValueError:
            raise BlocksParseError(f"line {lineno}: not a list of integers: {raw!r}") from None
        if k is None:
            k = len(blk)
        if len(blk) != k:
            raise BlocksParseError(f"line {lineno}: expected {k} points, got {len(blk)}")
        if any(x < 1 for x in blk):
            raise BlocksParseError(f"line {lineno}: points are 1-based")
        blocks.append(blk)
    if not blocks:
        raise BlocksParseError("no blocks found")
    top = max(max(b) for b in blocks)
    if v is None:
        v = top
    elif top > v:
        raise BlocksParseError(f"point {top} exceeds v={v}")
    return BlockDesign.from_blocks(v, k, blocks)


def read_blocks(path: Union[str, Path], v: Optional[int] = None, k: Optional[int] = None) -> BlockDesign:
    return parse_blocks(Path(path).read_text(), v, k)


def write_blocks(design: BlockDesign, path: Union[str, Path], comment: Optional[str] = None) -> None:
    Path(path).write_text(design.to_text(comment))


@dataclass(frozen=True)
class ConcurrenceTarget:
    """Required lambda_ij (zero diagonal) and replication per point."""

    v: int
    pair_target: tuple[tuple[int, ...], ...]
    point_target: tuple[int, ...]

    @classmethod
    def uniform(cls, v: int, k: int, lam: int) -> "ConcurrenceTarget":
        """Target of a 2-(v, k, lam) design."""
        if (lam * (v - 1)) % (k - 1):
            raise DesignError("replication lam*(v-1)/(k-1) is not an integer")
        r = lam * (v - 1) // (k - 1)
        pairs = tuple(tuple(0 if i == j else lam for j in range(v)) for i in range(v))
        return cls(v, pairs, (r,) * v)

    @classmethod
    def for_rgd(cls, params: DesignParams, graph: RegularGraph) -> "ConcurrenceTarget":
        """lambda on every pair plus one more on the edges of T."""
        v = params.v
        if graph.v != v or graph.delta != params.delta:
            raise DesignError("graph does not match (v, delta) of the design parameters")
        pairs = tuple(
            tuple(0 if i == j else params.lam + ((graph.adj[i] >> j) & 1) for j in range(v)) for i in range(v)
        )
        return cls(v, pairs, (params.r,) * v)

    def check(self, k: int, b: int) -> None:
        v = self.v
        if any(self.pair_target[i][i] for i in range(v)):
            raise DesignError("pair target must have a zero diagonal")
        for i in range(v):
            for j in range(i):
                if self.pair_target[i][j] != self.pair_target[j][i]:
                    raise DesignError("pair target must be symmetric")
                if self.pair_target[i][j] < 0:
                    raise DesignError("pair targets must be nonnegative")
        if sum(self.point_target) != b * k:
            raise DesignError(f"replications sum to {sum(self.point_target)}, expected b*k = {b * k}")
        for i in range(v):
            if sum(self.pair_target[i]) != self.point_target[i] * (k - 1):
                raise DesignError(f"point {i + 1}: pair targets do not sum to r*(k-1)")
        total_pairs = sum(self.pair_target[i][j] for i in range(v) for j in range(i))
        if total_pairs != b * k * (k - 1) // 2:
            raise DesignError("pair targets do not sum to b*k*(k-1)/2")


@dataclass(frozen=True)
class Realization:
    status: str  # FOUND, NONE or UNDECIDED
    design: Optional[BlockDesign] = None
    nodes: int = 0


class _OutOfBudget(Exception):
    pass


def _realize_pairs_k2(target: ConcurrenceTarget) -> BlockDesign:
    v = target.v
    blocks = []
    for i in range(v):
        for j in range(i + 1, v):
            blocks.extend([(i + 1, j + 1)] * target.pair_target[i][j])
    return BlockDesign(v, 2, tuple(blocks))


def realize(
    target: ConcurrenceTarget,
    k: int,
    b: Optional[int] = None,
    node_budget: Optional[int] = None,
    fast_path: bool = True,
) -> Realization:
    """Find a binary design with the given concurrences, prove there is none, or give up.

    Blocks are chosen in nondecreasing lexicographic order, always for the
    smallest point that still needs blocks; the next block for point p must
    contain the smallest partner q that p still has to meet, which is what
    makes the multiset order enforceable.  ``node_budget`` caps the number of
    search nodes; running out yields UNDECIDED rather than NONE.
    """
    v = target.v
    if b is None:
        total = sum(target.point_target)
        if total % k:
            raise DesignError(f"replications sum to {total}, not a multiple of k = {k}")
        b = total // k
    target.check(k, b)
    if k == 2 and fast_path:
        return Realization(FOUND, _realize_pairs_k2(target), 0)

    rr = list(target.point_target)
    rp = [list(row) for row in target.pair_target]
    chosen: list[tuple[int, ...]] = []
    nodes = 0

    def feasible_point(x: int) -> bool:
        row = rp[x]
        cap = rr[x]
        return all(c <= cap for c in row)

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _OutOfBudget
        p = next((i for i in range(v) if rr[i] > 0), None)
        if p is None:
            return True
        row = rp[p]
        q0 = next((q for q in range(p + 1, v) if row[q] > 0), None)
        if q0 is None:
            return False
        prev = chosen[-1] if chosen and chosen[-1][0] == p else None
        pool = [q for q in range(q0 + 1, v) if row[q] > 0 and rp[q0][q] > 0]
        for rest in combinations(pool, k - 2):
            blk = (p, q0) + rest
            if prev is not None and blk < prev:
                continue
            if any(rp[a][c] <= 0 for a, c in combinations(rest, 2)):
                continue
            for a, c in combinations(blk, 2):
                rp[a][c] -= 1
                rp[c][a] -= 1
            for a in blk:
                rr[a] -= 1
            chosen.append(blk)
            if all(feasible_point(a) for a in blk) and rec():
                return True
            chosen.pop()
            for a in blk:
                rr[a] += 1
            for a, c in combinations(blk, 2):
                rp[a][c] += 1
                rp[c][a] += 1
        return False

    try:
        ok = rec()
    except _OutOfBudget:
        return Realization(UNDECIDED, None, nodes)
    if not ok:
        return Realization(NONE, None, nodes)
    design = BlockDesign(v, k, tuple(tuple(x + 1 for x in blk) for blk in chosen))
    return Realization(FOUND, design, nodes)


def two_design_admissible(v: int, k: int, lam: int) -> bool:
    """Divisibility conditions for a 2-(v, k, lam) design."""
    return (lam * (v - 1)) % (k - 1) == 0 and (lam * v * (v - 1)) % (k * (k - 1)) == 0


@dataclass(frozen=True)
class LambdaTildeResult:
    status: str  # FOUND, or UNDECIDED when the cap or a budget stopped the scan
    lambda_tilde: Optional[int]
    design: Optional[BlockDesign]
    refuted: tuple[int, ...] = ()
    undecided: tuple[int, ...] = ()
    message: str = ""


def min_lambda_tilde(v: int, k: int, cap: int = DEFAULT_LAMBDA_CAP, node_budget: Optional[int] = None) -> LambdaTildeResult:
    """Smallest lambda for which a 2-(v, k, lambda) design exists, with a witness.

    Candidates failing divisibility are skipped; the rest are searched in
    increasing order.  If a smaller admissible lambda ran out of budget, the
    first success is still returned but cannot be claimed minimal, so the
    status is UNDECIDED.
    """
    if not 2 <= k < v:
        raise DesignError(f"need 2 <= k < v, got v={v}, k={k}")
    refuted: list[int] = []
    undecided: list[int] = []
    for lam in range(1, cap + 1):
        if not two_design_admissible(v, k, lam):
            continue
        b = lam * v * (v - 1) // (k * (k - 1))
        res = realize(ConcurrenceTarget.uniform(v, k, lam), k, b, node_budget)
        log.debug("2-(%d,%d,%d): %s after %d nodes", v, k, lam, res.status, res.nodes)
        if res.status == FOUND:
            status = FOUND if not undecided else UNDECIDED
            msg = "" if not undecided else f"smaller candidates undecided: {undecided}"
            return LambdaTildeResult(status, lam, res.design, tuple(refuted), tuple(undecided), msg)
        (refuted if res.status == NONE else undecided).append(lam)
    return LambdaTildeResult(UNDECIDED, None, None, tuple(refuted), tuple(undecided), f"unknown above cap {cap}")


def develop_cyclic(v: int, initial_blocks: Sequence[Sequence[int]], k: Optional[int] = None) -> BlockDesign:
    """Union of the translation orbits mod v of 1-based initial blocks.

    A block with a short orbit contributes each distinct translate once.
    """
    out = []
    for blk in initial_blocks:
        base = [x - 1 for x in blk]
        if any(not 0 <= x < v for x in base):
            raise DesignError(f"initial block {tuple(blk)} has points outside 1..{v}")
        seen = set()
        for t in range(v):
            tr = tuple(sorted((x + t) % v for x in base))
            if tr in seen:
                continue
            seen.add(tr)
            out.append(tuple(x + 1 for x in tr))
    if k is None:
        k = len(initial_blocks[0]) if initial_blocks else 0
    return BlockDesign(v, k, tuple(out))


@dataclass(frozen=True)
class RGDReport:
    is_rgd: bool
    is_binary: bool
    is_connected: bool
    r: Optional[int]  # None when replications are unequal
    lam: Optional[int]
    delta: Optional[int]
    graph: Optional[RegularGraph] = field(default=None, repr=False)
    reason: str = ""

    def summary(self, design: BlockDesign) -> str:
        if not self.is_rgd:
            return f"not an RGD: {self.reason}"
        conn = "connected" if self.is_connected else "disconnected"
        return f"RGD: v={design.v} k={design.k} r={self.r} λ={self.lam} δ={self.delta}, {conn}"


def verify_rgd(d: BlockDesign) -> RGDReport:
    """Check that a design is a binary, equireplicate, connected RGD and extract T."""
    v, k = d.v, d.k
    binary = d.is_binary
    conc = d.concurrence()
    adj_any = [0] * v
    for i in range(v):
        for j in range(v):
            if i != j and conc[i][j] > 0:
                adj_any[i] |= 1 << j
    connected = is_connected(adj_any)
    reps = d.replications()
    r = reps[0] if len(set(reps)) == 1 else None

    def fail(reason: str, lam=None, delta=None) -> RGDReport:
        return RGDReport(False, binary, connected, r, lam, delta, None, reason)

    if not binary:
        return fail("a block repeats a point (design is not binary)")
    if r is None:
        return fail(f"replications are unequal ({min(reps)}..{max(reps)})")
    lam, delta = divmod(r * (k - 1), v - 1)
    off = Counter(conc[i][j] for i in range(v) for j in range(i + 1, v))
    if not set(off) <= {lam, lam + 1}:
        bad = sorted(set(off) - {lam, lam + 1})
        return fail(f"not an RGD: concurrences {bad} outside {{{lam}, {lam + 1}}}", lam, delta)
    if not connected:
        return fail("concurrence graph is disconnected", lam, delta)
    tadj = [0] * v
    for i in range(v):
        for j in range(v):
            if i != j and conc[i][j] == lam + 1:
                tadj[i] |= 1 << j
    degs = {row.bit_count() for row in tadj}
    if degs != {delta}:
        return fail(f"T is not {delta}-regular (degrees {sorted(degs)})", lam, delta)
    graph = None
    if delta == 0:
        reason = "balanced: T is empty (the design is a BIBD)"
    elif is_connected(tadj):
        graph = RegularGraph.from_certificate(canonical_certificate(tadj, v))
        reason = ""
    else:
        reason = "T is reducible (disconnected)"
    return RGDReport(True, binary, connected, r, lam, delta, graph, reason)


def t_adjacency(d: BlockDesign) -> list[int]:
    """The 0/1 matrix T of pairs at lambda + 1, as bitmask rows (RGD assumed)."""
    rep = verify_rgd(d)
    if not rep.is_rgd:
        raise DesignError(rep.reason)
    v = d.v
    conc = d.concurrence()
    return [sum(1 << j for j in range(v) if j != i and conc[i][j] == rep.lam + 1) for i in range(v)]


@dataclass(frozen=True)
class BestResult:
    status: str  # FOUND, NONE (up to max_rank) or UNDECIDED
    design: Optional[BlockDesign] = None
    graph: Optional[RegularGraph] = None
    rank: Optional[int] = None
    tie_class: Optional[int] = None
    tried: int = 0
    undecided: tuple[bytes, ...] = ()


def best_rgd(params: DesignParams, family, max_rank: Optional[int] = None, node_budget: Optional[int] = None) -> BestResult:
    """First graph in rank order (every member of a tie class) that a design realizes.

    ``family`` is a ``ranking.RankedFamily`` for (v, delta).  Ranks above
    ``max_rank`` are not tried; when any tried graph ran out of budget and
    nothing was found, the result is UNDECIDED rather than NONE.
    """
    if params.delta == 0:
        raise DesignError("delta = 0: the design is balanced; use min_lambda_tilde")
    if (family.v, family.delta) != (params.v, params.delta):
        raise DesignError(
            f"family is M({family.v},{family.delta}) but the parameters need M({params.v},{params.delta})"
        )
    tried = 0
    undecided: list[bytes] = []
    for entry in family.entries:
        if max_rank is not None and entry.rank > max_rank:
            break
        graph = entry.graph
        tried += 1
        target = ConcurrenceTarget.for_rgd(params, graph)
        res = realize(target, params.k, params.b, node_budget)
        log.debug("rank %d (class %d): %s after %d nodes", entry.rank, entry.tie_class, res.status, res.nodes)
        if res.status == FOUND:
            return BestResult(FOUND, res.design, graph, entry.rank, entry.tie_class, tried, tuple(undecided))
        if res.status == UNDECIDED:
            undecided.append(entry.certificate)
    status = UNDECIDED if undecided else NONE
    return BestResult(status, None, None, None, None, tried, tuple(undecided))
