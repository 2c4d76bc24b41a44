"""Exact A and D for the two v=14, k=2, r=5 designs at x = 0..5.

A is printed both as the harmonic mean and as 14 times it, the scale of the
published figures.
"""
from pathlib import Path

from rgdopt.criteria import a_value, d_value, sym_vector
from rgdopt.designs import read_blocks, verify_rgd
from rgdopt.exactmath import decimal_string

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
DESIGNS = {"35-edge (A-best at y=0)": "v14_k2_r5_a_best_y0.blocks", "appendix #12 (D-best)": "appendix/design12.blocks"}


def main():
    for label, name in DESIGNS.items():
        g = verify_rgd(read_blocks(DATA / name)).graph
        s = sym_vector(g)
        print(label)
        for x in range(6):
            a = a_value(s, x)
            print(f"  x={x}  A={decimal_string(a, 7)}  v*A={decimal_string(g.v * a, 7)}  D={d_value(s, x)}")


if __name__ == "__main__":
    main()
