#!/usr/bin/env python3
"""Cycle census across the preset maps, with signature breakdowns.

For each map, enumerate every cycle reachable from seeds 1..seed-max,
print its min-normal form, and decompose each odd element into its
(x, y, z) signature so the closed form m * (2^y - q^x) = z can be read
off directly.

Usage:
    python scripts/cycle_census.py --seed-max 1000
"""

import argparse
import sys

from collatz_lab import (
    FIVE_N_PLUS_ONE,
    STANDARD,
    THREE_N_MINUS_ONE,
    check_preliminaries,
    find_cycles,
    signatures_for_cycle,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed-max", type=int, default=1000)
    parser.add_argument("--step-cap", type=int, default=10**4)
    parser.add_argument("--value-cap-bits", type=int, default=256)
    args = parser.parse_args()

    for mp in (STANDARD, THREE_N_MINUS_ONE, FIVE_N_PLUS_ONE):
        seed_max = min(args.seed_max, 100) if mp is FIVE_N_PLUS_ONE else args.seed_max
        report = find_cycles(mp, seed_max, args.step_cap, 1 << args.value_cap_bits)
        print(f"== {mp.label}: seeds 1..{seed_max}, "
              f"{len(report.cycles)} cycle(s), {report.capped_seed_count} capped seed(s)")
        if report.diverged_examples:
            print(f"   capped examples: {list(report.diverged_examples)}")
        for mc in report.cycles:
            props = check_preliminaries(mc)
            sigs = signatures_for_cycle(mc)
            x, y = sigs[0].x, sigs[0].y
            print(f"   cycle min={mc.elements[0]} length={len(mc.elements)} "
                  f"odd={x} even={y} periodic={props.periodic.verdict.value}")
            print(f"     elements: {list(mc.elements)}")
            for sig in sigs:
                print(f"     m={sig.m}: profile={list(sig.y_profile)} z={sig.z} "
                      f"check {sig.m}*(2^{sig.y} - {mp.q}^{sig.x}) = {sig.z}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
