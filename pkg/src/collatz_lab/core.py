"""Exact arithmetic kernel for Collatz-style maps.

Single steps, iterates, full trajectories, and 2-adic utilities over
Python's native arbitrary-precision integers. A map is parameterized by an
odd multiplier q and an odd addend r: even values are halved, odd values go
to q*n + r. Both parameters odd means every odd step lands on an even
value, so an odd step is always followed by at least one halving; the
decomposition and search modules rely on that parity structure.

The domain is strictly positive integers. Zero is rejected everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NotOddError

DEFAULT_STEP_CAP = 100_000
DEFAULT_VALUE_CAP = 1 << 512


@dataclass(frozen=True)
class MapParams:
    """Parameters of a generalized map: n/2 for even n, q*n + r for odd n.

    Constraints: q odd and >= 3, r odd and nonzero (possibly negative),
    q + r >= 1 so the map stays inside the positive integers.
    """

    q: int
    r: int
    label: str = ""

    def __post_init__(self):
        if self.q < 3 or self.q % 2 == 0:
            raise ValueError(f"odd-step multiplier must be an odd integer >= 3, got {self.q}")
        if self.r == 0 or self.r % 2 == 0:
            raise ValueError(f"odd-step addend must be odd and nonzero, got {self.r}")
        if self.q + self.r < 1:
            raise ValueError(f"q + r must be >= 1 to keep values positive, got {self.q + self.r}")
        if not self.label:
            object.__setattr__(self, "label", f"{self.q}n{self.r:+d}")
        # parity contract: an odd step always produces an even value
        for sample in (1, 3, 5):
            assert (self.q * sample + self.r) % 2 == 0

    @property
    def is_standard(self) -> bool:
        return self.q == 3 and self.r == 1


STANDARD = MapParams(3, 1, "standard")
THREE_N_MINUS_ONE = MapParams(3, -1, "3n-1")
FIVE_N_PLUS_ONE = MapParams(5, 1, "5n+1")

PRESET_MAPS = {
    "standard": STANDARD,
    "3n+1": STANDARD,
    "3n-1": THREE_N_MINUS_ONE,
    "5n+1": FIVE_N_PLUS_ONE,
}


class StopReason(str, Enum):
    REACHED_ONE = "reached_one"
    CYCLE_CLOSED = "cycle_closed"
    STEP_CAP_HIT = "step_cap_hit"
    VALUE_CAP_HIT = "value_cap_hit"


@dataclass(frozen=True)
class TrajectoryRecord:
    """A start value, the iterate sequence produced from it, and summary stats."""

    start: int
    values: tuple[int, ...]
    stop_reason: StopReason
    max_excursion: int
    total_steps: int


def _require_positive(n: int, what: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{what} must be >= 1, got {n}")


def step(n: int, map_params: MapParams = STANDARD) -> int:
    """One application of the map: n/2 if n is even, q*n + r if n is odd."""
    _require_positive(n)
    if n % 2 == 0:
        return n >> 1
    return map_params.q * n + map_params.r


def iterate(n: int, i: int, map_params: MapParams = STANDARD) -> int:
    """The i-th iterate of the map; i = 0 returns n unchanged."""
    _require_positive(n)
    if i < 0:
        raise ValueError(f"iteration count must be >= 0, got {i}")
    v = n
    for _ in range(i):
        v = step(v, map_params)
    return v


def trajectory(
    n: int,
    map_params: MapParams = STANDARD,
    step_cap: int = DEFAULT_STEP_CAP,
    value_cap: int = DEFAULT_VALUE_CAP,
) -> TrajectoryRecord:
    """Iterate from n, recording every value, until a stop condition fires.

    Stop conditions, in the order they are checked after each step:

    * the new value repeats an earlier one -> ``CYCLE_CLOSED``;
    * the new value is 1 under the standard map -> ``REACHED_ONE``
      (for other maps 1 is an ordinary value and the walk continues
      until it closes a cycle or a cap fires);
    * ``step_cap`` applications were consumed -> ``STEP_CAP_HIT``;
    * a value exceeded ``value_cap`` -> ``VALUE_CAP_HIT`` (the offending
      value is not recorded).

    Caps are reported, never raised: 5n+1-style maps are believed to have
    divergent trajectories, so unbounded iteration is deliberately
    impossible here.
    """
    _require_positive(n)
    if step_cap < 1:
        raise ValueError(f"step_cap must be >= 1, got {step_cap}")
    values = [n]
    seen = {n}
    stop = StopReason.STEP_CAP_HIT
    v = n
    for _ in range(step_cap):
        v = step(v, map_params)
        if v > value_cap:
            stop = StopReason.VALUE_CAP_HIT
            break
        if v in seen:
            values.append(v)
            stop = StopReason.CYCLE_CLOSED
            break
        values.append(v)
        seen.add(v)
        if v == 1 and map_params.is_standard:
            stop = StopReason.REACHED_ONE
            break
    vals = tuple(values)
    return TrajectoryRecord(
        start=n,
        values=vals,
        stop_reason=stop,
        max_excursion=max(vals),
        total_steps=len(vals) - 1,
    )


def v2(n: int) -> int:
    """2-adic valuation: the largest e with 2**e dividing n."""
    _require_positive(n)
    return (n & -n).bit_length() - 1


def odd_successor(m: int, map_params: MapParams = STANDARD) -> tuple[int, int]:
    """Apply one odd step and every halving it enables, in one move.

    For odd m, q*m + r is even, so at least one halving is always
    available. Returns ``(m', e)`` with ``m' = (q*m + r) / 2**e`` odd and
    ``e >= 1``; equivalently, ``iterate(m, e + 1)`` == ``m'``.
    """
    _require_positive(m, "m")
    if m % 2 == 0:
        raise NotOddError(f"odd_successor requires an odd value, got {m}")
    t = map_params.q * m + map_params.r
    e = (t & -t).bit_length() - 1
    return t >> e, e
