"""Batch convergence verification over seed ranges and exhaustive cycle censuses.

Range verification uses the descent argument: once every seed in [1, N] is
known to reach some value below itself, induction over N gives that every
seed reaches 1 under the standard map. Per-seed work therefore stops at
the first value below the seed, which is asymptotically far cheaper than
running each trajectory to 1.

The scan batches each odd step with all the halvings it enables (one
2-adic valuation per move). Full-trajectory statistics (total steps to 1,
maximum excursion) are then resolved in one ascending pass: a seed's
descent target is smaller than the seed, so its statistics are already
final when the seed is processed. The resolved numbers are exactly those
of naive per-seed iteration.

Work is partitioned into contiguous seed sub-ranges. Partial results are
keyed by their ranges and merged independently of completion order, so
reports are reproducible for any partition count and any scheduling.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .core import DEFAULT_STEP_CAP, DEFAULT_VALUE_CAP, MapParams, STANDARD
from .cycles import MinNormalCycle, detect_cycle, min_normalize
from .errors import CapExhaustedError, NotStandardMapError

ProgressHook = Callable[[int], None]


@dataclass(frozen=True)
class RangeVerificationReport:
    """Outcome of verifying [1, n_max]: counts plus record statistics.

    ``max_total_steps`` / ``max_excursion`` are full-trajectory records
    (steps until 1 is first reached; largest value attained), each with the
    smallest seed achieving it. ``elapsed_s`` and ``partition_count``
    describe the run, not the mathematics: ``comparable()`` drops them, and
    is the equality notion under which reports are partition-invariant.
    """

    n_max: int
    verified_count: int
    max_excursion: int
    max_excursion_seed: int
    max_total_steps: int
    max_total_steps_seed: int
    elapsed_s: float
    partition_count: int

    def comparable(self) -> dict:
        return {
            "n_max": self.n_max,
            "verified_count": self.verified_count,
            "max_excursion": self.max_excursion,
            "max_excursion_seed": self.max_excursion_seed,
            "max_total_steps": self.max_total_steps,
            "max_total_steps_seed": self.max_total_steps_seed,
        }


@dataclass(frozen=True)
class CycleSearchReport:
    """Deduplicated min-normal cycles reachable from seeds 1..seed_max.

    ``cycles`` is sorted by (minimum element, length, elements) so the
    report is deterministic. Seeds whose probe hit a cap are counted, and
    the smallest few are kept as examples.
    """

    map_params: MapParams
    seed_max: int
    step_cap: int
    value_cap: int
    cycles: tuple[MinNormalCycle, ...]
    capped_seed_count: int
    diverged_examples: tuple[int, ...]


def _split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous sub-ranges of [lo, hi], sizes differing by at most one."""
    total = hi - lo + 1
    parts = max(1, min(parts, total))
    base, extra = divmod(total, parts)
    ranges = []
    start = lo
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        ranges.append((start, start + size - 1))
        start += size
    return ranges


def _descent_scan(args: tuple[int, int, int, int]) -> tuple[list[int], list[int], list[int]]:
    """Stage 1 worker: per-seed descent segments for seeds in [lo, hi].

    Returns (steps, peaks, drops) where, for seed n, the trajectory reaches
    drops[n] < n after steps[n] applications with maximum value peaks[n]
    along the way. Even seeds descend in one halving; odd seeds loop over
    batched odd-step moves. Seed 1 sits on the terminal cycle and is
    verified by convention (0 steps, peak 1).
    """
    lo, hi, step_cap, value_cap = args
    steps: list[int] = []
    peaks: list[int] = []
    drops: list[int] = []
    ap_s, ap_p, ap_d = steps.append, peaks.append, drops.append
    for n in range(lo, hi + 1):
        if n == 1:
            ap_s(0)
            ap_p(1)
            ap_d(0)
        elif n & 1 == 0:
            ap_s(1)
            ap_p(n)
            ap_d(n >> 1)
        else:
            v = n
            s = 0
            pk = n
            while v >= n:
                t = 3 * v + 1
                if t > pk:
                    pk = t
                    if t > value_cap:
                        raise CapExhaustedError(seed=n, kind="value", limit=value_cap)
                e = (t & -t).bit_length() - 1
                v = t >> e
                s += 1 + e
                if s > step_cap:
                    raise CapExhaustedError(seed=n, kind="step", limit=step_cap)
            ap_s(s)
            ap_p(pk)
            ap_d(v)
    return steps, peaks, drops


def verify_range(
    n_max: int,
    map_params: MapParams = STANDARD,
    partition_hint: int = 1,
    step_cap: int = DEFAULT_STEP_CAP,
    value_cap: int = DEFAULT_VALUE_CAP,
    progress: ProgressHook | None = None,
    use_memo: bool = True,
) -> RangeVerificationReport:
    """Confirm that every seed in [1, n_max] descends below itself.

    Standard map only: the descent argument needs every smaller seed to be
    covered by the same run. Any seed that exhausts a cap raises
    CapExhaustedError naming the seed; capped seeds are never silently
    skipped, since one would mean divergence or an unknown cycle.

    ``partition_hint`` splits the scan into contiguous sub-ranges; hints
    above 1 run them in worker processes when the platform allows, falling
    back to an in-process sweep otherwise. Either way the report content is
    identical, with only ``elapsed_s``/``partition_count`` reflecting the
    run shape. ``progress`` is invoked with a monotonically nondecreasing
    count of seeds completed, finishing at n_max.

    ``use_memo=False`` disables the ascending lookup-table resolution and
    recomputes every seed's full trajectory directly; it changes nothing in
    the report except elapsed time (it exists to make that transparency
    testable).
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if not map_params.is_standard:
        raise NotStandardMapError("range verification requires the standard map")
    if partition_hint < 1:
        raise ValueError(f"partition_hint must be >= 1, got {partition_hint}")

    t0 = time.perf_counter()
    ranges = _split_range(1, n_max, partition_hint)

    if not use_memo:
        report = _verify_range_direct(n_max, ranges, step_cap, value_cap, progress)
        return report

    jobs = [(lo, hi, step_cap, value_cap) for lo, hi in ranges]
    results: dict[tuple[int, int], tuple[list[int], list[int], list[int]]] = {}
    done = 0
    if len(jobs) > 1:
        try:
            workers = min(len(jobs), os.cpu_count() or 1)
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for (lo, hi), part in zip(ranges, pool.map(_descent_scan, jobs)):
                    results[(lo, hi)] = part
                    done += hi - lo + 1
                    if progress:
                        progress(done)
        except (OSError, PermissionError):
            results.clear()
            done = 0
    if not results:
        for (lo, hi), job in zip(ranges, jobs):
            results[(lo, hi)] = _descent_scan(job)
            done += hi - lo + 1
            if progress:
                progress(done)

    # Stage 2: place partial tables by range, then resolve ascending.
    steps = [0] * (n_max + 1)
    peaks = [0] * (n_max + 1)
    drops = [0] * (n_max + 1)
    for (lo, hi), (s_part, p_part, d_part) in results.items():
        steps[lo : hi + 1] = s_part
        peaks[lo : hi + 1] = p_part
        drops[lo : hi + 1] = d_part

    best_steps, best_steps_seed = 0, 1
    best_peak, best_peak_seed = peaks[1], 1
    for n in range(2, n_max + 1):
        d = drops[n]
        s = steps[n] + steps[d]
        p = peaks[d]
        if peaks[n] > p:
            p = peaks[n]
        steps[n] = s
        peaks[n] = p
        if s > best_steps:
            best_steps, best_steps_seed = s, n
        if p > best_peak:
            best_peak, best_peak_seed = p, n

    return RangeVerificationReport(
        n_max=n_max,
        verified_count=n_max,
        max_excursion=best_peak,
        max_excursion_seed=best_peak_seed,
        max_total_steps=best_steps,
        max_total_steps_seed=best_steps_seed,
        elapsed_s=time.perf_counter() - t0,
        partition_count=len(ranges),
    )


def _verify_range_direct(
    n_max: int,
    ranges: list[tuple[int, int]],
    step_cap: int,
    value_cap: int,
    progress: ProgressHook | None,
) -> RangeVerificationReport:
    """Memoization-free reference path: every seed walks its full trajectory."""
    t0 = time.perf_counter()
    best_steps, best_steps_seed = 0, 1
    best_peak, best_peak_seed = 1, 1
    done = 0
    for lo, hi in ranges:
        for n in range(lo, hi + 1):
            v = n
            s = 0
            pk = n
            while v != 1:
                if v & 1:
                    t = 3 * v + 1
                    if t > pk:
                        pk = t
                        if t > value_cap:
                            raise CapExhaustedError(seed=n, kind="value", limit=value_cap)
                    e = (t & -t).bit_length() - 1
                    v = t >> e
                    s += 1 + e
                else:
                    v >>= 1
                    s += 1
                if s > step_cap:
                    raise CapExhaustedError(seed=n, kind="step", limit=step_cap)
            if s > best_steps:
                best_steps, best_steps_seed = s, n
            if pk > best_peak:
                best_peak, best_peak_seed = pk, n
        done += hi - lo + 1
        if progress:
            progress(done)
    return RangeVerificationReport(
        n_max=n_max,
        verified_count=n_max,
        max_excursion=best_peak,
        max_excursion_seed=best_peak_seed,
        max_total_steps=best_steps,
        max_total_steps_seed=best_steps_seed,
        elapsed_s=time.perf_counter() - t0,
        partition_count=len(ranges),
    )


def _census_scan(
    args: tuple[int, int, int, int, int, int, int]
) -> tuple[dict[tuple[int, ...], tuple[int, ...]], int, list[int]]:
    """Census worker: probe every seed in [lo, hi] for a reachable cycle.

    Returns (cycles keyed by min-normal elements, capped seed count, first
    few capped seeds in ascending order).
    """
    lo, hi, q, r, step_cap, value_cap, example_cap = args
    mp = MapParams(q, r)
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    capped = 0
    examples: list[int] = []
    for n in range(lo, hi + 1):
        det = detect_cycle(n, mp, step_cap, value_cap)
        if det.cycle is None:
            capped += 1
            if len(examples) < example_cap:
                examples.append(n)
        else:
            mc = min_normalize(det.cycle)
            found.setdefault(mc.elements, mc.elements)
    return found, capped, examples


def find_cycles(
    map_params: MapParams,
    seed_max: int,
    step_cap: int = DEFAULT_STEP_CAP,
    value_cap: int = DEFAULT_VALUE_CAP,
    partition_hint: int = 1,
    progress: ProgressHook | None = None,
    max_diverged_examples: int = 10,
) -> CycleSearchReport:
    """Enumerate every cycle reachable from seeds 1..seed_max within caps.

    Cycles are deduplicated by min-normal form. Capped seeds are counted
    and the smallest ones kept as ``diverged_examples``; a census over a
    divergent family like 5n+1 is expected to cap on many seeds, and that
    is a finding, not an error.
    """
    if seed_max < 1:
        raise ValueError(f"seed_max must be >= 1, got {seed_max}")
    if partition_hint < 1:
        raise ValueError(f"partition_hint must be >= 1, got {partition_hint}")
    ranges = _split_range(1, seed_max, partition_hint)
    jobs = [
        (lo, hi, map_params.q, map_params.r, step_cap, value_cap, max_diverged_examples)
        for lo, hi in ranges
    ]
    parts: dict[tuple[int, int], tuple[dict, int, list[int]]] = {}
    done = 0
    if len(jobs) > 1:
        try:
            workers = min(len(jobs), os.cpu_count() or 1)
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for (lo, hi), part in zip(ranges, pool.map(_census_scan, jobs)):
                    parts[(lo, hi)] = part
                    done += hi - lo + 1
                    if progress:
                        progress(done)
        except (OSError, PermissionError):
            parts.clear()
            done = 0
    if not parts:
        for (lo, hi), job in zip(ranges, jobs):
            parts[(lo, hi)] = _census_scan(job)
            done += hi - lo + 1
            if progress:
                progress(done)

    all_cycles: set[tuple[int, ...]] = set()
    capped_total = 0
    example_pool: set[int] = set()
    for found, capped, examples in parts.values():
        all_cycles.update(found.keys())
        capped_total += capped
        example_pool.update(examples)

    cycles = tuple(
        MinNormalCycle(
            elements=elems,
            map_params=map_params,
            k=(elems[0] - 1) // 2 if elems[0] % 2 == 1 else None,
        )
        for elems in sorted(all_cycles, key=lambda e: (e[0], len(e), e))
    )
    return CycleSearchReport(
        map_params=map_params,
        seed_max=seed_max,
        step_cap=step_cap,
        value_cap=value_cap,
        cycles=cycles,
        capped_seed_count=capped_total,
        diverged_examples=tuple(sorted(example_pool)[:max_diverged_examples]),
    )
