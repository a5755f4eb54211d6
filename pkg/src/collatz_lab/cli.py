"""Command-line front end.

Every subcommand prints exactly one output envelope on stdout and keeps
diagnostics on stderr. The JSON envelope carries exactly the fields
schema_version, command, params, result, verdicts, elapsed_ms; the csv and
text formats flatten the same envelope.

Exit codes: 0 success; 1 a checked identity or property verdict failed
(which would be a bug or a discovery); 2 invalid input; 3 a cap was
exhausted before the computation could finish.

The environment variable COLLATZ_LAB_THREADS, when set, overrides the
--partitions flag of range and census commands.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from .core import (
    DEFAULT_STEP_CAP,
    MapParams,
    PRESET_MAPS,
    STANDARD,
    trajectory,
)
from .cycles import Cycle, check_preliminaries, min_normalize
from .diophantine import catalan_check, enumerate_pow_gap, replay_theorem
from .errors import CapExhaustedError, NotOddError, NotOnCycleError, NotStandardMapError
from .search import find_cycles, verify_range
from .signature import DEFAULT_ODD_STEP_CAP, decompose, signatures_for_cycle, verify_signature

SCHEMA_VERSION = "1.0"
DEFAULT_VALUE_CAP_BITS = 512


def parse_map(text: str) -> MapParams:
    """Accept a preset name (standard, 3n+1, 3n-1, 5n+1) or 'q,r'."""
    if text in PRESET_MAPS:
        return PRESET_MAPS[text]
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"map must be a preset name or 'q,r', got {text!r}")
    return MapParams(int(parts[0]), int(parts[1]))


def parse_elements(text: str) -> tuple[int, ...]:
    try:
        elems = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as e:
        raise ValueError(f"cycle elements must be comma-separated integers: {e}")
    if not elems:
        raise ValueError("cycle elements must be nonempty")
    return elems


def _map_dict(mp: MapParams) -> dict:
    return {"q": mp.q, "r": mp.r, "label": mp.label}


def _cycle_dict(mc) -> dict:
    return {
        "elements": list(mc.elements),
        "min": mc.elements[0],
        "length": len(mc.elements),
        "k": mc.k,
    }


def _min_normal_from_elements(elems: tuple[int, ...], mp: MapParams):
    cyc = Cycle(elems, mp)
    if not cyc.is_closed:
        raise ValueError(f"elements {list(elems)} do not close under the {mp.label} map")
    return min_normalize(cyc)


def cmd_trajectory(args) -> tuple[dict, dict, list]:
    mp = parse_map(args.map)
    value_cap = 1 << args.value_cap_bits
    params = {
        "n": args.n,
        "map": _map_dict(mp),
        "step_cap": args.step_cap,
        "value_cap_bits": args.value_cap_bits,
    }
    rec = trajectory(args.n, mp, args.step_cap, value_cap)
    result = {
        "start": rec.start,
        "values": list(rec.values),
        "stop_reason": rec.stop_reason.value,
        "max_excursion": rec.max_excursion,
        "total_steps": rec.total_steps,
    }
    return params, result, []


def cmd_cycles(args) -> tuple[dict, dict, list]:
    mp = parse_map(args.map)
    value_cap = 1 << args.value_cap_bits
    partitions = _resolve_partitions(args.partitions)
    params = {
        "map": _map_dict(mp),
        "seed_max": args.seed_max,
        "step_cap": args.step_cap,
        "value_cap_bits": args.value_cap_bits,
        "partitions": partitions,
    }
    report = find_cycles(mp, args.seed_max, args.step_cap, value_cap, partition_hint=partitions)
    ok = True
    for mc in report.cycles:
        sigs = signatures_for_cycle(mc)
        if not all(verify_signature(s) for s in sigs):
            ok = False
        if not check_preliminaries(mc).periodic.holds:
            ok = False
    result = {
        "cycles": [_cycle_dict(mc) for mc in report.cycles],
        "capped_seed_count": report.capped_seed_count,
        "diverged_examples": list(report.diverged_examples),
    }
    return params, result, [{"name": "cycles_verified", "ok": ok}]


def cmd_normalize(args) -> tuple[dict, dict, list]:
    mp = parse_map(args.map)
    elems = parse_elements(args.elements)
    params = {"elements": list(elems), "map": _map_dict(mp)}
    mc = _min_normal_from_elements(elems, mp)
    return params, _cycle_dict(mc), []


def cmd_check_props(args) -> tuple[dict, dict, list]:
    mp = parse_map(args.map)
    elems = parse_elements(args.elements)
    params = {"elements": list(elems), "map": _map_dict(mp)}
    mc = _min_normal_from_elements(elems, mp)
    report = check_preliminaries(mc)
    result = {"cycle": _cycle_dict(mc), "properties": report.as_dict()}
    return params, result, []


def cmd_decompose(args) -> tuple[dict, dict, list]:
    mp = parse_map(args.map)
    params = {"m": args.m, "map": _map_dict(mp), "step_cap": args.step_cap}
    sig = decompose(args.m, mp, args.step_cap)
    result = {
        "m": sig.m,
        "x": sig.x,
        "y": sig.y,
        "y_profile": list(sig.y_profile),
        "z": sig.z,
        "z_steps": list(sig.z_steps),
    }
    verdicts = [
        {"name": "closed_form_identity", "ok": sig.identity_gap() == 0},
        {"name": "replay_reproduces_base", "ok": verify_signature(sig)},
    ]
    return params, result, verdicts


def cmd_replay_theorem(args) -> tuple[dict, dict, list]:
    mp = parse_map(args.map)
    elems = parse_elements(args.elements)
    params = {"elements": list(elems), "map": _map_dict(mp), "step_cap": args.step_cap}
    mc = _min_normal_from_elements(elems, mp)
    report = replay_theorem(mc, args.step_cap)
    verdicts = [{"name": name, "ok": ok} for name, ok in report.line_verdicts()]
    return params, report.as_dict(), verdicts


def cmd_diophantine(args) -> tuple[dict, dict, list]:
    params = {"c": args.c, "x_max": args.x_max, "y_max": args.y_max}
    sols = enumerate_pow_gap(args.c, args.x_max, args.y_max)
    result = {
        "c": sols.c,
        "x_max": sols.x_max,
        "y_max": sols.y_max,
        "solutions": [list(p) for p in sols.solutions],
    }
    return params, result, []


def cmd_catalan(args) -> tuple[dict, dict, list]:
    params = {"x_max": args.x_max, "y_max": args.y_max}
    sols = catalan_check(args.x_max, args.y_max)
    result = {
        "x_max": sols.x_max,
        "y_max": sols.y_max,
        "solutions": [list(p) for p in sols.solutions],
        "solutions_x_ge_1": [list(p) for p in sols.restrict_x(1)],
    }
    return params, result, []


def cmd_verify_range(args) -> tuple[dict, dict, list]:
    mp = parse_map(args.map)
    value_cap = 1 << args.value_cap_bits
    partitions = _resolve_partitions(args.partitions)
    params = {
        "n": args.n,
        "map": _map_dict(mp),
        "step_cap": args.step_cap,
        "value_cap_bits": args.value_cap_bits,
        "partitions": partitions,
    }
    report = verify_range(args.n, mp, partitions, args.step_cap, value_cap)
    result = report.comparable()
    ok = report.verified_count == args.n
    return params, result, [{"name": "all_verified", "ok": ok}]


def _resolve_partitions(flag_value: int) -> int:
    env = os.environ.get("COLLATZ_LAB_THREADS")
    if env:
        return max(1, int(env))
    return flag_value


def _flatten(prefix: str, value, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for key, sub in value.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), sub, rows)
    elif isinstance(value, (list, tuple)):
        for i, sub in enumerate(value):
            _flatten(f"{prefix}[{i}]", sub, rows)
    else:
        rows.append((prefix, json.dumps(value)))


def render(envelope: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(envelope)
    rows: list[tuple[str, str]] = []
    _flatten("", envelope, rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["key", "value"])
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="collatz-lab",
        description="Trajectories, cycle censuses, odd-step signatures, and "
        "power-gap arithmetic for Collatz-style maps.",
    )
    parser.add_argument(
        "--format", choices=("json", "csv", "text"), default="json", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_map(p):
        p.add_argument("--map", default="standard", help="preset (standard|3n-1|5n+1) or 'q,r'")

    def add_caps(p, step_default=DEFAULT_STEP_CAP):
        p.add_argument("--step-cap", type=int, default=step_default, dest="step_cap")
        p.add_argument(
            "--value-cap-bits", type=int, default=DEFAULT_VALUE_CAP_BITS, dest="value_cap_bits"
        )

    p = sub.add_parser("trajectory", help="iterate a seed and report the value sequence")
    p.add_argument("n", type=int)
    add_map(p)
    add_caps(p)
    p.set_defaults(handler=cmd_trajectory)

    p = sub.add_parser("cycles", help="census of cycles reachable from seeds 1..seed-max")
    p.add_argument("--seed-max", type=int, required=True, dest="seed_max")
    add_map(p)
    add_caps(p)
    p.add_argument("--partitions", type=int, default=1)
    p.set_defaults(handler=cmd_cycles)

    p = sub.add_parser("normalize", help="rotate a cycle to its min-first form")
    p.add_argument("elements", help="comma-separated cycle elements, e.g. 4,2,1")
    add_map(p)
    p.set_defaults(handler=cmd_normalize)

    p = sub.add_parser("check-props", help="evaluate structural properties of a cycle")
    p.add_argument("elements")
    add_map(p)
    p.set_defaults(handler=cmd_check_props)

    p = sub.add_parser("decompose", help="odd-step signature of a cycle element")
    p.add_argument("m", type=int)
    add_map(p)
    p.add_argument("--step-cap", type=int, default=DEFAULT_ODD_STEP_CAP, dest="step_cap")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("replay-theorem", help="evaluate the cycle identity chain (standard map)")
    p.add_argument("elements")
    add_map(p)
    p.add_argument("--step-cap", type=int, default=DEFAULT_ODD_STEP_CAP, dest="step_cap")
    p.set_defaults(handler=cmd_replay_theorem)

    p = sub.add_parser("diophantine", help="enumerate 2^y - 3^x = c within bounds")
    p.add_argument("c", type=int)
    p.add_argument("--x-max", type=int, default=64, dest="x_max")
    p.add_argument("--y-max", type=int, default=64, dest="y_max")
    p.set_defaults(handler=cmd_diophantine)

    p = sub.add_parser("catalan", help="enumerate 3^x + 1 = 2^y within bounds")
    p.add_argument("--x-max", type=int, default=64, dest="x_max")
    p.add_argument("--y-max", type=int, default=64, dest="y_max")
    p.set_defaults(handler=cmd_catalan)

    p = sub.add_parser("verify-range", help="verify convergence for all seeds 1..n")
    p.add_argument("n", type=int)
    add_map(p)
    add_caps(p)
    p.add_argument("--partitions", type=int, default=1)
    p.set_defaults(handler=cmd_verify_range)

    return parser


def run(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(1_000_000)
    parser = build_parser()
    args = parser.parse_args(argv)

    t0 = time.perf_counter()
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "params": None,
        "result": None,
        "verdicts": [],
        "elapsed_ms": 0.0,
    }

    def emit() -> None:
        envelope["elapsed_ms"] = (time.perf_counter() - t0) * 1e3
        print(render(envelope, args.format))

    try:
        params, result, verdicts = args.handler(args)
    except NotOnCycleError as e:
        print(f"error: {e}", file=sys.stderr)
        emit()
        return 2 if e.witness is not None else 3
    except CapExhaustedError as e:
        print(f"error: {e}", file=sys.stderr)
        emit()
        return 3
    except (ValueError, NotOddError, NotStandardMapError) as e:
        print(f"error: {e}", file=sys.stderr)
        emit()
        return 2

    envelope["params"] = params
    envelope["result"] = result
    envelope["verdicts"] = verdicts
    emit()
    if any(not v["ok"] for v in verdicts):
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
