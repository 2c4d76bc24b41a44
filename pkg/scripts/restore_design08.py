"""Rank the two completions of appendix #8 inside M(13,8).

The printed #8 lacks three blocks; the points 10..13 are short of replication
and no pair among them is covered. Both ways to add three edges among them
are ranked against the whole family, built as complements of all 4-regular
graphs on 13 vertices (connected or not).
"""
import argparse
from pathlib import Path

from rgdopt.designs import BlockDesign, read_blocks, verify_rgd, write_blocks
from rgdopt.graphgen import RegularGraph, enumerate_regular
from rgdopt.ranking import rank_family, rank_of

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
COMPLETIONS = [((10, 12), (11, 13), (12, 13)), ((10, 13), (11, 12), (12, 13))]


def quartic_graphs_13():
    """Adjacency masks of all 4-regular graphs on 13 vertices up to isomorphism."""
    out = [g.adj for g in enumerate_regular(13, 4)]
    for a, b in ((5, 8), (6, 7)):
        for g in enumerate_regular(a, 4):
            for h in enumerate_regular(b, 4):
                out.append(tuple(g.adj) + tuple(row << a for row in h.adj))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, help="write the rank-1 completion here")
    args = ap.parse_args()
    full = (1 << 13) - 1
    family = [RegularGraph.from_adjacency([full & ~row & ~(1 << i) for i, row in enumerate(adj)])
              for adj in quartic_graphs_13()]
    print(f"|M(13,8)| = {len(family)}")
    printed = read_blocks(DATA / "appendix" / "design08.blocks")
    fams = {c: rank_family(family, c) for c in ("a", "d")}
    for c, fam in fams.items():
        print(f"x0^{c.upper()} = {fam.x0}")
    for extra in COMPLETIONS:
        d = BlockDesign.from_blocks(13, 2, list(printed.blocks) + list(extra))
        rep = verify_rgd(d)
        ranks = {c: rank_of(rep.graph.certificate, fam)[0] for c, fam in fams.items()}
        print(f"add {extra}: {rep.reason or 'RGD'}  rank A {ranks['a']}  rank D {ranks['d']}")
        if args.out and ranks["a"] == 1:
            write_blocks(d, args.out, comment="appendix design 8 with three missing blocks restored")


if __name__ == "__main__":
    main()
