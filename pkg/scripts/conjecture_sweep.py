"""Check that the 3x3 min-plus family generates M_3 over the t-quotient for a range of t.

    python scripts/conjecture_sweep.py --tmax 3
    python scripts/conjecture_sweep.py --tmin 4 --tmax 5   # 6**9 and 7**9 elements

Memory grows with (t+2)**9 (about 30 bytes per element with the dense table),
so t = 5 wants roughly 2 GB and a good deal of patience.
"""

import argparse
import json

from tropmon.verify import check_conjecture


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tmin", type=int, default=0)
    ap.add_argument("--tmax", type=int, default=3)
    ap.add_argument("--out", help="append JSON lines here as well")
    args = ap.parse_args()
    for t in range(args.tmin, args.tmax + 1):
        rep = check_conjecture(t)
        line = json.dumps(rep)
        print(line, flush=True)
        if args.out:
            with open(args.out, "a") as fh:
                fh.write(line + "\n")


if __name__ == "__main__":
    main()
