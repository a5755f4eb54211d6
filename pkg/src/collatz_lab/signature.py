"""Odd-step decomposition of cycle elements.

Walking a cycle from an odd element m, each move is one odd step followed
by all the halvings it enables. After x such moves m recurs, and the walk
is summarized by a signature (x, y, y-profile, z): x odd steps, y total
halvings distributed as the profile [y_0 .. y_{x-1}], and an accumulator z
built by the recurrence

    z_0 = r,    z_i = q * z_{i-1} + r * 2**(y_0 + ... + y_{i-1}),

whose total satisfies the exact closed form m * (2**y - q**x) = z. For a
full cycle traversal x counts the odd elements, y the even ones, and
x + y is the cycle length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import MapParams, STANDARD, odd_successor
from .errors import NotOddError, NotOnCycleError

DEFAULT_ODD_STEP_CAP = 10_000


@dataclass(frozen=True)
class CycleSignature:
    """Decomposition data for one odd cycle element.

    ``z`` is signed: maps with r < 0 accumulate negative totals (the sign
    of z always matches the sign of r). ``z_steps`` keeps every
    intermediate accumulator of the recurrence.
    """

    m: int
    x: int
    y: int
    y_profile: tuple[int, ...]
    z: int
    z_steps: tuple[int, ...]
    map_params: MapParams

    def identity_gap(self) -> int:
        """m * (2**y - q**x) - z; zero iff the closed form holds exactly."""
        return self.m * ((1 << self.y) - self.map_params.q**self.x) - self.z


def decompose(
    m: int,
    map_params: MapParams = STANDARD,
    step_cap: int = DEFAULT_ODD_STEP_CAP,
) -> CycleSignature:
    """Decompose an odd cycle element into its signature.

    Walks odd successors from m until m recurs, recording per-move halving
    counts and running the accumulator recurrence. ``step_cap`` bounds the
    number of odd steps.

    Raises NotOddError for even m. Raises NotOnCycleError when m does not
    recur: with a witness (the first other odd value to repeat, proof that
    the walk descended into a cycle excluding m), or without one when the
    cap ran out first.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m % 2 == 0:
        raise NotOddError(f"decompose requires an odd value, got {m}")
    q, r = map_params.q, map_params.r
    seen = {m}
    y_profile: list[int] = []
    z_steps: list[int] = []
    z = 0
    y_sum = 0
    cur = m
    for _ in range(step_cap):
        cur, e = odd_successor(cur, map_params)
        z = r if not y_profile else q * z + r * (1 << y_sum)
        y_profile.append(e)
        y_sum += e
        z_steps.append(z)
        if cur == m:
            sig = CycleSignature(
                m=m,
                x=len(y_profile),
                y=y_sum,
                y_profile=tuple(y_profile),
                z=z,
                z_steps=tuple(z_steps),
                map_params=map_params,
            )
            assert sig.identity_gap() == 0
            return sig
        if cur in seen:
            raise NotOnCycleError(base=m, witness=cur, odd_steps=len(y_profile))
        seen.add(cur)
    raise NotOnCycleError(base=m, witness=None, odd_steps=step_cap)


def signatures_for_cycle(mc, step_cap: int = DEFAULT_ODD_STEP_CAP) -> tuple[CycleSignature, ...]:
    """Decompose every odd element of a min-normal cycle.

    All signatures of one cycle share the same (x, y), and their count
    equals x; a violation means the input was not a single closed cycle.
    """
    sigs = tuple(
        decompose(m, mc.map_params, step_cap) for m in mc.elements if m % 2 == 1
    )
    if not sigs:
        raise ValueError("cycle has no odd element; not a closed cycle of this map family")
    shapes = {(s.x, s.y) for s in sigs}
    if len(shapes) != 1 or len(sigs) != sigs[0].x:
        raise ValueError(f"elements do not traverse a single cycle (shapes {sorted(shapes)})")
    return sigs


def verify_signature(sig: CycleSignature) -> bool:
    """Check a signature against the map, not against its own construction.

    True iff the closed form m * (2**y - q**x) = z holds exactly AND
    replaying the halving profile through odd_successor reproduces m with
    exactly the recorded per-move halving counts.
    """
    if sig.x != len(sig.y_profile) or sig.y != sum(sig.y_profile):
        return False
    if sig.identity_gap() != 0:
        return False
    cur = sig.m
    for e in sig.y_profile:
        cur, actual = odd_successor(cur, sig.map_params)
        if actual != e:
            return False
    return cur == sig.m
