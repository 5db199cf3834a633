#!/usr/bin/env python3
"""Tabulate threshold word counts and growth estimates for small alphabets.

Prints a CSV table per alphabet plus a summary of ratio and k-th root
estimates; for alphabets of size 27 and up the guaranteed exponential lower
bound is shown next to the measured growth.
"""

import argparse
import sys
import time

from dejean.growth import (
    count_threshold_words,
    growth_estimate,
    table_to_csv,
    theorem2_lower_bound,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alphabets", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--max-length", type=int, default=16)
    parser.add_argument("--budget", type=int, default=2_000_000)
    parser.add_argument("--symmetry", action="store_true")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    for n in args.alphabets:
        t0 = time.monotonic()
        table = count_threshold_words(
            n, args.max_length, budget=args.budget,
            symmetry=args.symmetry, jobs=args.jobs,
        )
        dt = time.monotonic() - t0
        print(f"# alphabet {n}, threshold {table.parameters['threshold']} "
              f"(strict), {dt:.1f}s")
        sys.stdout.write(table_to_csv(table))
        if table.truncated_at is not None:
            print(f"# truncated at length {table.truncated_at} "
                  f"(budget {args.budget})")
        if table.counts:
            est = growth_estimate(table)
            print(f"# last ratio {est['last_ratio']}, "
                  f"last kth root {est['last_kth_root']}, "
                  f"fekete violations {len(est['fekete_violations'])}")
        if n >= 27:
            bound = theorem2_lower_bound(n, args.max_length)
            print(f"# guaranteed lower bound {bound['base']}^(k/{bound['divisor']})"
                  f" = {bound['value']} at k = {args.max_length}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
