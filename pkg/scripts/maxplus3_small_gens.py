"""Greedy irredundant generating sets of the 3x3 max-plus quotient monoids.

    python scripts/maxplus3_small_gens.py --t 1 2 --out gens_dir

For each t the set is re-verified from scratch (fullness and irredundancy) and
written as a --gens-file compatible JSON array. t = 2 takes a few minutes.
"""

import argparse
import json
from pathlib import Path

from tropmon.cli import gens_json
from tropmon.semiring import max_plus
from tropmon.verify import small_generating_set, verify_full, verify_irredundant


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--t", type=int, nargs="+", default=[1])
    ap.add_argument("--out", type=Path, help="directory for maxplus3_t<T>.json")
    args = ap.parse_args()
    for t in args.t:
        gens, rep = small_generating_set(max_plus(t), 3)
        rep["full"] = verify_full(gens)["full"]
        rep["irredundant"] = verify_irredundant(gens)["irredundant"]
        print(json.dumps(rep), flush=True)
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"maxplus3_t{t}.json").write_text(json.dumps(gens_json(gens), indent=1))


if __name__ == "__main__":
    main()
