"""Word lengths of the 2x2 factorization against the sum of finite entries.

    python scripts/factor_lengths.py --samples 20000 --max-entry 100
"""

import argparse
import random

from tropmon.factorize import WORD_BASE, WORD_SLOPE, factor
from tropmon.matrix import random_matrix
from tropmon.semiring import ABSORB, max_plus, min_plus


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=20000)
    ap.add_argument("--max-entry", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for spec in (min_plus(), max_plus()):
        worst = 0.0
        longest = 0
        for _ in range(args.samples):
            m = random_matrix(spec, 2, rng, max_entry=args.max_entry, absorb_prob=0.2)
            total = sum(v for v in m.entries if v != ABSORB)
            n = len(factor(m))
            longest = max(longest, n)
            worst = max(worst, (n - WORD_BASE) / max(total, 1))
        print(f"{spec}: longest word {longest}, max (len - {WORD_BASE}) / entry sum = {worst:.3f}"
              f" (bound slope {WORD_SLOPE})")


if __name__ == "__main__":
    main()
