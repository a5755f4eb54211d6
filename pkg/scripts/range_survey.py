#!/usr/bin/env python3
"""Survey convergence records over growing seed ranges.

Verifies [1, N] for N = 10^3, 10^4, ... up to --n-max and prints the
record total-step and excursion seeds at each scale, plus throughput.

Usage:
    python scripts/range_survey.py --n-max 1000000 --partitions 2
"""

import argparse
import sys
import time

from collatz_lab import verify_range


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=10**6)
    parser.add_argument("--partitions", type=int, default=1)
    parser.add_argument("--step-cap", type=int, default=10**5)
    parser.add_argument("--value-cap-bits", type=int, default=512)
    args = parser.parse_args()

    scales = []
    n = 1000
    while n < args.n_max:
        scales.append(n)
        n *= 10
    scales.append(args.n_max)

    print(f"{'N':>12} {'steps':>7} {'@seed':>9} {'excursion':>16} {'@seed':>9} "
          f"{'sec':>7} {'seeds/s':>10}")
    for n_max in scales:
        t0 = time.perf_counter()
        rep = verify_range(
            n_max,
            partition_hint=args.partitions,
            step_cap=args.step_cap,
            value_cap=1 << args.value_cap_bits,
        )
        dt = time.perf_counter() - t0
        print(
            f"{rep.n_max:>12} {rep.max_total_steps:>7} {rep.max_total_steps_seed:>9} "
            f"{rep.max_excursion:>16} {rep.max_excursion_seed:>9} "
            f"{dt:>7.2f} {rep.n_max / dt:>10.0f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
