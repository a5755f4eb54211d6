"""Cycle detection, min-first normalization, and structural property reports.

A cycle is stored in trajectory order. Its unique canonical form rotates
the minimum element to the front, which makes deduplication across seeds a
plain equality check on element tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import DEFAULT_STEP_CAP, DEFAULT_VALUE_CAP, MapParams, STANDARD, StopReason, iterate, step


@dataclass(frozen=True)
class Cycle:
    """A nonempty sequence of distinct positive values in trajectory order.

    Construction checks shape only; closure under the map is a property
    (``is_closed``) so that malformed inputs can still be carried around and
    diagnosed instead of being unrepresentable.
    """

    elements: tuple[int, ...]
    map_params: MapParams

    def __post_init__(self):
        if not self.elements:
            raise ValueError("cycle must be nonempty")
        if any(e < 1 for e in self.elements):
            raise ValueError("cycle elements must be >= 1")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("cycle elements must be distinct")

    @property
    def is_closed(self) -> bool:
        e = self.elements
        return all(step(e[i], self.map_params) == e[(i + 1) % len(e)] for i in range(len(e)))


@dataclass(frozen=True)
class MinNormalCycle:
    """A cycle rotated so its minimum element comes first.

    ``k`` is the value with ``elements[0] == 2*k + 1`` when the minimum is
    odd (always the case for a genuine cycle), and None otherwise.
    """

    elements: tuple[int, ...]
    map_params: MapParams
    k: int | None

    def __post_init__(self):
        if not self.elements:
            raise ValueError("cycle must be nonempty")
        if self.elements[0] != min(self.elements):
            raise ValueError("min-normal form must start at the minimum element")

    @property
    def length(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class CycleDetection:
    """Outcome of a cycle probe: the cycle if one closed within the caps,
    otherwise None plus the cap that fired."""

    cycle: Cycle | None
    stop_reason: StopReason


def detect_cycle(
    n: int,
    map_params: MapParams = STANDARD,
    step_cap: int = DEFAULT_STEP_CAP,
    value_cap: int = DEFAULT_VALUE_CAP,
) -> CycleDetection:
    """Probe the trajectory of n for a cycle, in constant memory.

    Contract (algorithm-independent, matches a naive seen-set detector):
    the cycle is reported iff the trajectory revisits a value within
    ``step_cap`` map applications while every value stays <= ``value_cap``.
    The returned elements are the cycle portion in trajectory order,
    starting from the first cycle element the trajectory reaches.

    Implementation: Brent's algorithm. The fast pointer advances one
    application at a time, so values are examined in trajectory order and
    cap violations fire at exactly the position the naive detector would
    see them. Detection can need up to ~3x the revisit position, hence the
    larger internal walk budget; a found cycle is only reported when its
    revisit position fits inside step_cap. A final reconstruction pass
    re-walks the tail to collect the cycle elements exactly.
    """
    if step_cap < 1:
        raise ValueError(f"step_cap must be >= 1, got {step_cap}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    budget = 3 * step_cap + 4
    tortoise = n
    hare = n
    power = 1
    lam = 0
    pos = 0
    found = False
    while pos < budget:
        hare = step(hare, map_params)
        pos += 1
        lam += 1
        if hare > value_cap:
            if pos <= step_cap:
                return CycleDetection(None, StopReason.VALUE_CAP_HIT)
            return CycleDetection(None, StopReason.STEP_CAP_HIT)
        if hare == tortoise:
            found = True
            break
        if lam == power:
            tortoise = hare
            power <<= 1
            lam = 0
    if not found:
        return CycleDetection(None, StopReason.STEP_CAP_HIT)
    # lam is the cycle length; align two walkers lam apart to find the entry.
    ahead = n
    for _ in range(lam):
        ahead = step(ahead, map_params)
    entry = n
    mu = 0
    while entry != ahead:
        entry = step(entry, map_params)
        ahead = step(ahead, map_params)
        mu += 1
    if mu + lam > step_cap:
        return CycleDetection(None, StopReason.STEP_CAP_HIT)
    elems = [entry]
    v = entry
    for _ in range(lam - 1):
        v = step(v, map_params)
        elems.append(v)
    return CycleDetection(Cycle(tuple(elems), map_params), StopReason.CYCLE_CLOSED)


def min_normalize(cycle: Cycle) -> MinNormalCycle:
    """Rotate a cycle so its minimum element comes first.

    Elements are distinct, so the rotation is unique and the operation is
    idempotent: every rotation of the same cycle normalizes identically.
    """
    elems = cycle.elements
    i = elems.index(min(elems))
    rotated = elems[i:] + elems[:i]
    m0 = rotated[0]
    k = (m0 - 1) // 2 if m0 % 2 == 1 else None
    return MinNormalCycle(rotated, cycle.map_params, k)


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class PropertyCheck:
    verdict: Verdict
    witness: int | None = None
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS


@dataclass(frozen=True)
class PropertyReport:
    """Structural facts evaluated on one min-normal cycle.

    * ``min_is_odd``: the minimum element is odd.
    * ``min_odd_form``: the minimum can be written 2k+1 (k is recorded).
    * ``third_affine_form``: the element two steps past the minimum equals
      3k + (3+r)/2. That shape is an artifact of q = 3 algebra (it comes
      from (q*(2k+1)+r)/2), so for q != 3 the check is not applicable; at
      r = 1 it reduces to 3k + 2.
    * ``third_is_odd``: that same element is odd. The trivial standard
      cycle {1, 4, 2} fails this one (its third element is 2).
    * ``periodic``: every element returns to itself after length steps.

    Cycles shorter than 3 elements read "the element two steps past the
    minimum" with wraparound indexing (position 2 mod length);
    ``wraparound_used`` records that this happened.
    """

    min_is_odd: PropertyCheck
    min_odd_form: PropertyCheck
    third_affine_form: PropertyCheck
    third_is_odd: PropertyCheck
    periodic: PropertyCheck
    k: int | None
    wraparound_used: bool

    def as_dict(self) -> dict:
        out: dict = {"k": self.k, "wraparound_used": self.wraparound_used}
        for name in ("min_is_odd", "min_odd_form", "third_affine_form", "third_is_odd", "periodic"):
            check: PropertyCheck = getattr(self, name)
            out[name] = {"verdict": check.verdict.value, "witness": check.witness, "note": check.note}
        return out


def check_preliminaries(mc: MinNormalCycle) -> PropertyReport:
    """Evaluate the structural properties above on one min-normal cycle."""
    elems = mc.elements
    mp = mc.map_params
    length = len(elems)
    m0 = elems[0]
    wraparound = length < 3
    m2 = elems[2 % length]
    wrap_note = "evaluated with wraparound" if wraparound else ""

    if m0 % 2 == 1:
        min_is_odd = PropertyCheck(Verdict.HOLDS, witness=m0)
        k = (m0 - 1) // 2
        min_odd_form = PropertyCheck(Verdict.HOLDS, witness=k)
    else:
        min_is_odd = PropertyCheck(Verdict.FAILS, witness=m0, note="minimum is even")
        k = None
        min_odd_form = PropertyCheck(Verdict.NOT_APPLICABLE, note="minimum is even")

    if k is None:
        third_affine_form = PropertyCheck(Verdict.NOT_APPLICABLE, note="minimum is even")
    elif mp.q != 3:
        third_affine_form = PropertyCheck(
            Verdict.NOT_APPLICABLE, note="affine form is specific to q = 3"
        )
    else:
        expected = 3 * k + (3 + mp.r) // 2
        ok = m2 == expected
        third_affine_form = PropertyCheck(
            Verdict.HOLDS if ok else Verdict.FAILS, witness=m2, note=wrap_note
        )

    third_is_odd = PropertyCheck(
        Verdict.HOLDS if m2 % 2 == 1 else Verdict.FAILS,
        witness=m2,
        note=wrap_note if m2 % 2 == 1 else (wrap_note or "third element is even"),
    )

    bad = next((m for m in elems if iterate(m, length, mp) != m), None)
    periodic = (
        PropertyCheck(Verdict.HOLDS)
        if bad is None
        else PropertyCheck(Verdict.FAILS, witness=bad, note="does not return after length steps")
    )

    return PropertyReport(
        min_is_odd=min_is_odd,
        min_odd_form=min_odd_form,
        third_affine_form=third_affine_form,
        third_is_odd=third_is_odd,
        periodic=periodic,
        k=k,
        wraparound_used=wraparound,
    )
