"""Print x0^A and x0^D for every feasible (v, delta) up to --v-max."""
import argparse
import time

from rgdopt.graphgen import enumerate_regular
from rgdopt.ranking import rank_family


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--v-min", type=int, default=5)
    ap.add_argument("--v-max", type=int, default=10)
    ap.add_argument("--delta-max", type=int, default=None)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    print("v\tdelta\tM\tx0A\tx0D\tseconds")
    for v in range(args.v_min, args.v_max + 1):
        for delta in range(3, min(v - 1, args.delta_max or v - 1) + 1):
            if (v * delta) % 2:
                continue
            t = time.perf_counter()
            graphs = enumerate_regular(v, delta, workers=args.workers)
            fa = rank_family(graphs, "a", workers=args.workers)
            fd = rank_family(graphs, "d", workers=args.workers)
            print(f"{v}\t{delta}\t{len(graphs)}\t{fa.x0}\t{fd.x0}\t{time.perf_counter() - t:.1f}", flush=True)


if __name__ == "__main__":
    main()
