"""Command-line interface: enumerate, rank, best, verify, table, values, develop-cyclic, min-lambda."""

from __future__ import annotations

import argparse
import hashlib
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import designs, ranking
from .criteria import a_value, d_value, sym_vector
from .exactmath import decimal_string
from .graphgen import RegularGraph, enumerate_regular
from .graphgen.graph6 import encode_graph6, read_graph6

log = logging.getLogger("rgdopt")

EXIT_OK = 0
EXIT_NONE = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    cache_dir: Path = Path(".rgdopt-cache")
    workers: int = 1
    node_budget: Optional[int] = None
    fmt: str = "text"

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        self.cache_dir = Path(self.cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)

    def graphs_path(self, v: int, delta: int) -> Path:
        return self.cache_dir / f"v{v}-d{delta}.g6"

    def rank_path(self, v: int, delta: int, criterion: str) -> Path:
        return self.cache_dir / f"v{v}-d{delta}-{criterion}.rank"


# ---- cache -----------------------------------------------------------------


def _g6_checksum(lines: Sequence[str]) -> str:
    return hashlib.sha256("".join(line + "\n" for line in lines).encode("ascii")).hexdigest()


def _load_graphs_cache(path: Path) -> Optional[list[RegularGraph]]:
    if not path.exists():
        return None
    lines = path.read_text(encoding="ascii").splitlines()
    if not lines or not lines[-1].startswith("# checksum "):
        log.warning("%s is truncated; recomputing", path)
        return None
    body = lines[:-1]
    if _g6_checksum(body) != lines[-1].split()[2]:
        log.warning("%s fails its checksum; recomputing", path)
        return None
    return [RegularGraph.from_adjacency(adj) for adj in read_graph6(body)]


def _save_graphs_cache(path: Path, graphs: Sequence[RegularGraph]) -> None:
    body = [encode_graph6(g.adj) for g in graphs]
    tmp = path.with_suffix(".g6.tmp")
    tmp.write_text("".join(line + "\n" for line in body) + f"# checksum {_g6_checksum(body)}\n", encoding="ascii")
    tmp.replace(path)


def family_graphs(cfg: RunConfig, v: int, delta: int) -> list[RegularGraph]:
    path = cfg.graphs_path(v, delta)
    graphs = _load_graphs_cache(path)
    if graphs is None:
        graphs = enumerate_regular(v, delta, workers=cfg.workers)
        _save_graphs_cache(path, graphs)
    return graphs


def ranked_family(cfg: RunConfig, v: int, delta: int, criterion: str) -> ranking.RankedFamily:
    path = cfg.rank_path(v, delta, criterion)
    if path.exists():
        try:
            return ranking.load_family(path)
        except ranking.RankingError as exc:
            log.warning("%s: %s; recomputing", path, exc)
    graphs = family_graphs(cfg, v, delta)
    if not graphs:
        raise ranking.RankingError(f"M({v},{delta}) is empty: no connected {delta}-regular graph on {v} vertices")
    fam = ranking.rank_family(graphs, criterion, workers=cfg.workers)
    ranking.save_family(fam, path)
    return fam


def _criteria(arg: str) -> list[str]:
    return ["a", "d"] if arg == "both" else [arg]


# ---- commands ----------------------------------------------------------------


def cmd_enumerate(cfg: RunConfig, out: Optional[Path] = None) -> int:
    v, delta = cfg.params["v"], cfg.params["delta"]
    graphs = family_graphs(cfg, v, delta)
    if out is not None:
        out.write_text("".join(encode_graph6(g.adj) + "\n" for g in graphs), encoding="ascii")
    n = len(graphs)
    print(f"{n} graph" + ("" if n == 1 else "s"))
    return EXIT_OK


def cmd_rank(cfg: RunConfig, criterion: str) -> int:
    v, delta = cfg.params["v"], cfg.params["delta"]
    for c in _criteria(criterion):
        fam = ranked_family(cfg, v, delta, c)
        if cfg.fmt == "tsv":
            print(f"{v}\t{delta}\t{c}\t{fam.x0}\t{len(fam)}")
        else:
            print(f"M({v},{delta}): {len(fam)} graphs, {fam.tie_classes().__len__()} tie classes, x0^{c.upper()} = {fam.x0}")
    return EXIT_OK


def _values_lines(sym, xs: Sequence[int]) -> list[str]:
    lines = []
    for x in xs:
        a = a_value(sym, x)
        lines.append(f"x={x}\tA={a.numerator}/{a.denominator}\tA~{decimal_string(a, 7)}\tD={d_value(sym, x)}")
    return lines


def _candidate_family(cfg: RunConfig, v: int, delta: int, criterion: str, graphs_file: Optional[Path]):
    if graphs_file is None:
        return ranked_family(cfg, v, delta, criterion)
    graphs = sorted({RegularGraph.from_adjacency(adj) for adj in read_graph6(graphs_file)})
    bad = [g for g in graphs if (g.v, g.delta) != (v, delta)]
    if bad:
        raise designs.DesignError(f"{graphs_file} contains graphs outside M({v},{delta})")
    return ranking.rank_family(graphs, criterion, workers=cfg.workers)


def _reorder_at(fam: ranking.RankedFamily, x: int) -> ranking.RankedFamily:
    """The same family ranked by exact value at a finite offset x."""
    value = a_value if fam.criterion == "a" else d_value
    scored = sorted(fam.entries, key=lambda e: (-value(e.sym, x), e.certificate))
    entries = []
    cls = rank = 0
    prev = None
    for pos, e in enumerate(scored, 1):
        val = value(e.sym, x)
        if val != prev:
            cls += 1
            rank = pos
            prev = val
        entries.append(ranking.RankedEntry(rank, cls, e.certificate, e.sym))
    return ranking.RankedFamily(fam.v, fam.delta, fam.criterion, tuple(entries), fam.x0, ())


def cmd_best(
    cfg: RunConfig,
    criterion: str,
    max_rank: Optional[int],
    at_y: Optional[int],
    graphs_file: Optional[Path],
    out: Optional[Path],
    lambda_cap: int,
) -> int:
    v, k, r = cfg.params["v"], cfg.params["k"], cfg.params["r"]
    params = designs.params_for(v, k, r)
    if params.delta == 0:
        print(f"δ = 0 for (v={v}, k={k}, r={r}): the design is balanced, see min-lambda", file=sys.stderr)
        return EXIT_NONE
    lt = designs.min_lambda_tilde(v, k, cap=lambda_cap, node_budget=cfg.node_budget)
    lam_t = lt.lambda_tilde
    status = EXIT_OK
    for c in _criteria(criterion):
        fam = _candidate_family(cfg, v, params.delta, c, graphs_file)
        if at_y is not None:
            if lam_t is None and at_y:
                print("λ̃ unknown, cannot place --at-y above 0", file=sys.stderr)
                return EXIT_NONE
            fam = _reorder_at(fam, params.lam + at_y * (lam_t or 0))
        res = designs.best_rgd(params, fam, max_rank=max_rank, node_budget=cfg.node_budget)
        head = f"[{c.upper()}] v={v} k={k} r={r} b={params.b} λ={params.lam} δ={params.delta} λ̃={lam_t if lam_t is not None else 'unknown'}"
        print(head)
        if res.status != designs.FOUND:
            limit = f" up to rank {max_rank}" if max_rank else ""
            print(f"{res.status}{limit} ({res.tried} graphs tried)")
            status = EXIT_NONE
            continue
        scope = "candidates supplied" if graphs_file else f"M({v},{params.delta})"
        print(f"rank {res.rank} of {len(fam)} in {scope} (tie class {res.tie_class}); rank 1: {'yes' if res.rank == 1 else 'no'}")
        print(f"graph {res.graph.cert_hex}")
        xs = [params.lam + at_y * (lam_t or 0)] if at_y is not None else [params.lam] + ([params.lam + lam_t] if lam_t else [])
        for line in _values_lines(sym_vector(res.graph), xs):
            print(line)
        if out is not None:
            target = out if len(_criteria(criterion)) == 1 else out.with_name(f"{out.stem}-{c}{out.suffix}")
            designs.write_blocks(res.design, target, comment=f"v={v} k={k} r={r} criterion={c} rank={res.rank}")
        else:
            sys.stdout.write(res.design.to_text())
    return status


def cmd_verify(cfg: RunConfig, path: Path, v: Optional[int], k: Optional[int]) -> int:
    d = designs.read_blocks(path, v, k)
    rep = designs.verify_rgd(d)
    print(rep.summary(d))
    if rep.is_rgd and rep.graph is not None and cfg.fmt == "text":
        print(f"T certificate {rep.graph.cert_hex}")
    return EXIT_OK if rep.is_rgd else EXIT_NONE


def cmd_values(cfg: RunConfig, path: Path, xs: Sequence[int]) -> int:
    d = designs.read_blocks(path)
    rep = designs.verify_rgd(d)
    if not rep.is_rgd or rep.graph is None:
        print(f"cannot evaluate: {rep.reason}", file=sys.stderr)
        return EXIT_NONE
    for line in _values_lines(sym_vector(rep.graph), xs):
        print(line)
    return EXIT_OK


def cmd_table(cfg: RunConfig, v_min: int, v_max: int, delta_max: Optional[int], k: Optional[int], r_max: int) -> int:
    if k is None:
        print("v\tdelta\tM\tx0A\tx0D")
        for v in range(v_min, v_max + 1):
            for delta in range(3, min(v - 1, delta_max or v - 1) + 1):
                if (v * delta) % 2:
                    continue
                fa = ranked_family(cfg, v, delta, "a")
                fd = ranked_family(cfg, v, delta, "d")
                print(f"{v}\t{delta}\t{len(fa)}\t{fa.x0}\t{fd.x0}", flush=True)
        return EXIT_OK
    print("v\tk\tr\tb\tlambda\tlambda_tilde\tdelta")
    for v in range(max(v_min, k + 1), v_max + 1):
        lt = designs.min_lambda_tilde(v, k, node_budget=cfg.node_budget).lambda_tilde
        for r in range(1, r_max + 1):
            try:
                p = designs.params_for(v, k, r)
            except designs.DesignError:
                continue
            print(f"{v}\t{k}\t{r}\t{p.b}\t{p.lam}\t{lt if lt is not None else '?'}\t{p.delta}", flush=True)
    return EXIT_OK


def _parse_block(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad block {text!r}; use e.g. 1,2,4") from None


def cmd_develop_cyclic(cfg: RunConfig, v: int, blocks: Sequence[tuple[int, ...]], out: Optional[Path]) -> int:
    d = designs.develop_cyclic(v, blocks)
    if out is not None:
        designs.write_blocks(d, out)
    else:
        sys.stdout.write(d.to_text())
    rep = designs.verify_rgd(d)
    print(rep.summary(d) if rep.is_rgd else f"not an RGD: {rep.reason}", file=sys.stderr)
    return EXIT_OK


def cmd_min_lambda(cfg: RunConfig, cap: int, out: Optional[Path]) -> int:
    v, k = cfg.params["v"], cfg.params["k"]
    res = designs.min_lambda_tilde(v, k, cap=cap, node_budget=cfg.node_budget)
    if res.lambda_tilde is None:
        print(f"2-({v},{k},λ): {res.message}")
        return EXIT_NONE
    qual = "" if res.status == designs.FOUND else f" (not proven minimal: {res.message})"
    print(f"λ̃({v},{k}) = {res.lambda_tilde}{qual}")
    if out is not None:
        designs.write_blocks(res.design, out, comment=f"2-({v},{k},{res.lambda_tilde}) design")
    return EXIT_OK if res.status == designs.FOUND else EXIT_NONE


# ---- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", type=Path, default=Path(".rgdopt-cache"), help="cache directory")
    common.add_argument("--workers", type=int, default=1, help="worker processes (results do not depend on it)")
    common.add_argument("--node-budget", type=int, default=None, help="search node limit per design search")
    common.add_argument("--format", choices=["text", "tsv"], default="text")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="rgdopt", description="Exact A- and D-best regular graph designs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[common], help="connected delta-regular graphs on v vertices")
    s.add_argument("v", type=int)
    s.add_argument("delta", type=int)
    s.add_argument("--out", type=Path, help="also write the graphs to this graph6 file")

    s = sub.add_parser("rank", parents=[common], help="order M(v, delta) and print x0")
    s.add_argument("v", type=int)
    s.add_argument("delta", type=int)
    s.add_argument("--criterion", choices=["a", "d", "both"], default="both")

    s = sub.add_parser("best", parents=[common], help="best RGD for (v, k, r)")
    s.add_argument("v", type=int)
    s.add_argument("k", type=int)
    s.add_argument("r", type=int)
    s.add_argument("--criterion", choices=["a", "d", "both"], default="both")
    s.add_argument("--max-rank", type=int, default=None)
    s.add_argument("--at-y", type=int, default=None, help="rank by the value at x = λ + y·λ̃ instead of at infinity")
    s.add_argument("--graphs", type=Path, default=None, help="graph6 file of candidates to rank instead of all of M(v, δ)")
    s.add_argument("--lambda-cap", type=int, default=designs.DEFAULT_LAMBDA_CAP)
    s.add_argument("--out", type=Path)

    s = sub.add_parser("verify", parents=[common], help="check a blocks file is a connected RGD")
    s.add_argument("file", type=Path)
    s.add_argument("--points", dest="v_points", type=int, default=None, help="number of points v")
    s.add_argument("-k", type=int, default=None, help="block size")

    s = sub.add_parser("table", parents=[common], help="x0 table, or λ/λ̃/δ rows with --k")
    s.add_argument("--v-min", type=int, default=5)
    s.add_argument("--v-max", type=int, default=10)
    s.add_argument("--delta-max", type=int, default=None)
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--r-max", type=int, default=10)

    s = sub.add_parser("values", parents=[common], help="exact A and D of a design's T")
    s.add_argument("file", type=Path)
    s.add_argument("--x", type=int, action="append", help="offset x (repeatable, default 0)")

    s = sub.add_parser("develop-cyclic", parents=[common], help="develop initial blocks mod v")
    s.add_argument("v", type=int)
    s.add_argument("blocks", type=_parse_block, nargs="+", help="1-based initial blocks such as 1,2,4")
    s.add_argument("--out", type=Path)

    s = sub.add_parser("min-lambda", parents=[common], help="least λ̃ with a 2-(v,k,λ̃) design")
    s.add_argument("v", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--cap", type=int, default=designs.DEFAULT_LAMBDA_CAP)
    s.add_argument("--out", type=Path)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    params = {key: getattr(args, key) for key in ("v", "delta", "k", "r") if hasattr(args, key)}
    try:
        cfg = RunConfig(args.command, params, args.cache, args.workers, args.node_budget, args.format)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        if args.command == "enumerate":
            return cmd_enumerate(cfg, args.out)
        if args.command == "rank":
            return cmd_rank(cfg, args.criterion)
        if args.command == "best":
            return cmd_best(cfg, args.criterion, args.max_rank, args.at_y, args.graphs, args.out, args.lambda_cap)
        if args.command == "verify":
            return cmd_verify(cfg, args.file, args.v_points, args.k)
        if args.command == "table":
            return cmd_table(cfg, args.v_min, args.v_max, args.delta_max, args.k, args.r_max)
        if args.command == "values":
            return cmd_values(cfg, args.file, args.x or [0])
        if args.command == "develop-cyclic":
            return cmd_develop_cyclic(cfg, args.v, args.blocks, args.out)
        if args.command == "min-lambda":
            return cmd_min_lambda(cfg, args.cap, args.out)
    except designs.BlocksParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (designs.DesignError, ranking.RankingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser.error(f"unknown command {args.command}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
