"""Total order of M(v, delta) by a criterion for all large x, and its stabilization point.

Two graphs compare at infinity by the sign of the leading coefficient of their
comparison polynomial.  The order is then certified on an integer ray
[x0, inf): x0 is the largest, over adjacent pairs in distinct tie classes, of
the least integer from which the pair's comparison polynomial stays >= 0.
Adjacent pairs suffice because the relation is transitive on the ray.
"""

from __future__ import annotations

import hashlib
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cmp_to_key
from pathlib import Path
from typing import Optional, Sequence, Union

from .criteria import SymVector, comparison_poly, sym_vector
from .exactmath import min_int_nonneg_on_ray
from .graphgen import RegularGraph

log = logging.getLogger(__name__)

CRITERIA = ("a", "d")


class RankingError(ValueError):
    pass


def _check_criterion(criterion: str) -> str:
    c = criterion.lower()
    if c not in CRITERIA:
        raise RankingError(f"unknown criterion {criterion!r}; use 'a' or 'd'")
    return c


@dataclass(frozen=True)
class RankedEntry:
    rank: int  # competition rank: tied graphs share it
    tie_class: int  # 1-based index of the class of identical S vectors
    certificate: bytes
    sym: SymVector

    @property
    def graph(self) -> RegularGraph:
        return RegularGraph.from_certificate(self.certificate)


@dataclass(frozen=True)
class RankedFamily:
    v: int
    delta: int
    criterion: str
    entries: tuple[RankedEntry, ...]
    x0: int
    # (index i of the upper entry, certified m_i) for adjacent pairs across tie classes
    pair_witnesses: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def tie_classes(self) -> list[list[RankedEntry]]:
        out: list[list[RankedEntry]] = []
        for e in self.entries:
            if not out or out[-1][0].tie_class != e.tie_class:
                out.append([])
            out[-1].append(e)
        return out

    def ranks(self) -> list[int]:
        return [e.rank for e in self.entries]


def compare_at_infinity(sa: SymVector, sb: SymVector, criterion: str) -> int:
    """+1 if a is better than b for all large x, -1 if worse, 0 if tied."""
    return comparison_poly(sa, sb, _check_criterion(criterion)).sign_at_infinity()


def _sort_key_d(sym: SymVector):
    return tuple(-s for s in sym.s)


def order_at_infinity(
    items: Sequence[tuple[bytes, SymVector]], criterion: str
) -> list[tuple[bytes, SymVector, int]]:
    """Best first; returns (certificate, sym, tie_class) with ties ordered by certificate."""
    criterion = _check_criterion(criterion)
    if not items:
        return []
    v = items[0][1].v
    if any(s.v != v for _, s in items):
        raise RankingError("all graphs in a family must have the same number of vertices")
    # group identical S vectors first so ties never reach the comparator
    groups: dict[tuple[int, ...], list[bytes]] = {}
    for cert, s in items:
        groups.setdefault(s.s, []).append(cert)
    keys = [SymVector(v, s) for s in groups]
    if criterion == "d":
        keys.sort(key=_sort_key_d)
    else:
        keys.sort(key=cmp_to_key(lambda a, b: -compare_at_infinity(a, b, "a")))
    out = []
    for cls, sym in enumerate(keys, 1):
        for cert in sorted(groups[sym.s]):
            out.append((cert, sym, cls))
    return out


def _pair_min(args) -> int:
    upper, lower, criterion = args
    p = comparison_poly(upper, lower, criterion)
    m = min_int_nonneg_on_ray(p)
    if m is None:
        raise RankingError("comparison polynomial negative at infinity: ordering bug")
    return m


def stabilization_point(
    ordered: Sequence[tuple[bytes, SymVector, int]], criterion: str, workers: int = 1
) -> tuple[int, list[tuple[int, int]]]:
    """x0 and the per-pair witnesses (i, m_i) for adjacent cross-class pairs."""
    criterion = _check_criterion(criterion)
    idx = [i for i in range(len(ordered) - 1) if ordered[i][2] != ordered[i + 1][2]]
    tasks = [(ordered[i][1], ordered[i + 1][1], criterion) for i in idx]
    if workers > 1 and len(tasks) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            mins = list(pool.map(_pair_min, tasks, chunksize=64))
    else:
        mins = [_pair_min(t) for t in tasks]
    witnesses = list(zip(idx, mins))
    return max(mins, default=0), witnesses


def _sym_of_cert(cert: bytes) -> SymVector:
    return sym_vector(RegularGraph.from_certificate(cert))


def sym_vectors(graphs: Sequence[RegularGraph], workers: int = 1) -> list[SymVector]:
    if workers > 1 and len(graphs) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_sym_of_cert, [g.certificate for g in graphs], chunksize=32))
    return [sym_vector(g) for g in graphs]


def rank_family(
    graphs: Sequence[RegularGraph],
    criterion: str,
    syms: Optional[Sequence[SymVector]] = None,
    workers: int = 1,
) -> RankedFamily:
    """Order a family at infinity and certify its stabilization point."""
    criterion = _check_criterion(criterion)
    if not graphs:
        raise RankingError("empty family")
    v, delta = graphs[0].v, graphs[0].delta
    if any(g.v != v or g.delta != delta for g in graphs):
        raise RankingError("graphs do not share (v, delta)")
    if syms is None:
        syms = sym_vectors(graphs, workers)
    ordered = order_at_infinity([(g.certificate, s) for g, s in zip(graphs, syms)], criterion)
    x0, witnesses = stabilization_point(ordered, criterion, workers)
    entries = []
    rank = 0
    for pos, (cert, sym, cls) in enumerate(ordered, 1):
        if pos == 1 or ordered[pos - 2][2] != cls:
            rank = pos
        entries.append(RankedEntry(rank, cls, cert, sym))
    log.info("ranked %d graphs for (v=%d, delta=%d, %s): x0=%d", len(entries), v, delta, criterion, x0)
    return RankedFamily(v, delta, criterion, tuple(entries), x0, tuple(witnesses))


def rank_of(certificate: bytes, family: RankedFamily) -> tuple[int, int]:
    """(rank, tie_class) of a graph given by its certificate."""
    for e in family.entries:
        if e.certificate == certificate:
            return e.rank, e.tie_class
    raise RankingError("graph is not in this family")


def order_at_x(family: RankedFamily, x: int) -> list[RankedEntry]:
    """Diagnostic: entries sorted by exact criterion value at a finite x (best first, stable)."""
    from .criteria import a_value, d_value

    value = a_value if family.criterion == "a" else d_value
    return sorted(family.entries, key=lambda e: value(e.sym, x), reverse=True)


# ---- cache file ----------------------------------------------------------


def _checksum(lines: list[str]) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode("ascii") + b"\n")
    return h.hexdigest()


def format_family(fam: RankedFamily) -> str:
    """Header, one line per entry, one line per pair witness, and a checksum line."""
    lines = [f"{fam.v} {fam.delta} {fam.criterion} {fam.x0} {len(fam.entries)}"]
    for e in fam.entries:
        lines.append(" ".join([str(e.rank), str(e.tie_class), e.certificate.hex()] + [str(s) for s in e.sym.s[1:]]))
    for i, m in fam.pair_witnesses:
        lines.append(f"pair {i + 1} {m}")
    lines.append(f"checksum {_checksum(lines)}")
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> RankedFamily:
    lines = text.splitlines()
    if not lines or not lines[-1].startswith("checksum "):
        raise RankingError("ranking file is truncated (no checksum line)")
    body, check = lines[:-1], lines[-1].split()[1]
    if _checksum(body) != check:
        raise RankingError("ranking file checksum mismatch")
    try:
        v, delta, criterion, x0, m = body[0].split()
        v, delta, x0, m = int(v), int(delta), int(x0), int(m)
        entries = []
        for line in body[1 : 1 + m]:
            parts = line.split()
            s = (1,) + tuple(int(t) for t in parts[3:])
            entries.append(RankedEntry(int(parts[0]), int(parts[1]), bytes.fromhex(parts[2]), SymVector(v, s)))
        witnesses = []
        for line in body[1 + m :]:
            tag, i, mi = line.split()
            if tag != "pair":
                raise ValueError(line)
            witnesses.append((int(i) - 1, int(mi)))
    except (ValueError, IndexError) as exc:
        raise RankingError(f"malformed ranking file: {exc}") from None
    if len(entries) != m:
        raise RankingError("ranking file has fewer entries than its header claims")
    return RankedFamily(v, delta, _check_criterion(criterion), tuple(entries), x0, tuple(witnesses))


def save_family(fam: RankedFamily, path: Union[str, Path]) -> None:
    path = Path(path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(format_family(fam))
    tmp.replace(path)


def load_family(path: Union[str, Path]) -> RankedFamily:
    return parse_family(Path(path).read_text())
