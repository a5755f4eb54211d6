"""Bounded power-gap enumeration and exact replay of the cycle identity chain.

The quantity 2**y - 3**x ties standard-map cycles to exponential
Diophantine equations: a cycle signature (x, y, z) for element m satisfies
m * (2**y - 3**x) = z, and the chain of identities replayed here reduces a
hypothetical cycle, step by step, to the equation 3**x + 1 = 2**y.

Everything is evaluated in exact integer arithmetic; rational identities
are checked by cross-multiplication. Enumeration is exhaustive within its
bounds and never asserts non-existence beyond them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import STANDARD
from .cycles import MinNormalCycle
from .errors import NotStandardMapError
from .signature import DEFAULT_ODD_STEP_CAP, decompose


@dataclass(frozen=True)
class PowGapSolutionSet:
    """All (x, y) within bounds with 2**y - 3**x = c, ascending by x."""

    c: int
    x_max: int
    y_max: int
    solutions: tuple[tuple[int, int], ...]

    def restrict_x(self, min_x: int) -> tuple[tuple[int, int], ...]:
        return tuple(p for p in self.solutions if p[0] >= min_x)


def enumerate_pow_gap(c: int, x_max: int, y_max: int) -> PowGapSolutionSet:
    """Exhaustively solve 2**y - 3**x = c for 0 <= x <= x_max, 0 <= y <= y_max.

    For each x the candidate 2**y = c + 3**x is unique, so the scan is a
    single pass over x with a power-of-two test.
    """
    if x_max < 0 or y_max < 0:
        raise ValueError("bounds must be >= 0")
    sols = []
    p3 = 1
    for x in range(x_max + 1):
        t = c + p3
        if t >= 1:
            y = t.bit_length() - 1
            if (1 << y) == t and y <= y_max:
                sols.append((x, y))
        p3 *= 3
    return PowGapSolutionSet(c, x_max, y_max, tuple(sols))


def catalan_check(x_max: int, y_max: int) -> PowGapSolutionSet:
    """All (x, y) within bounds with 3**x + 1 = 2**y.

    Exponents start at 0, so both (0, 1) and (1, 2) appear; use
    ``restrict_x(1)`` for the x >= 1 convention. This only enumerates
    within bounds: non-existence beyond them is a known theorem about
    consecutive perfect powers, not something this function checks.
    """
    return enumerate_pow_gap(1, x_max, y_max)


def scaled_identity_gap(x: int, y: int, m: int, z: int) -> int:
    """Cross-multiplied gap of 3**x + z/m = 2**y: zero iff the identity holds."""
    return 3**x * m + z - (1 << y) * m


def power_gap_residual(k: int, z0: int, z1: int) -> int:
    """(2*z0 - z1) + k*(3*z0 - 2*z1); zero for accumulators of one cycle."""
    return (2 * z0 - z1) + k * (3 * z0 - 2 * z1)


def case_offset(z0: int, z1: int) -> int:
    """The substitution variable n with z1 = 2*z0 - n."""
    return 2 * z0 - z1


def case_identity_gap(k: int, z0: int, n: int) -> int:
    """(k+1)*n - k*(z0 - n); zero iff the rearranged residual holds."""
    return (k + 1) * n - k * (z0 - n)


def divides(k: int, n: int) -> bool:
    """Whether k divides n, with 0 | n meaning n == 0."""
    return n == 0 if k == 0 else n % k == 0


@dataclass(frozen=True)
class TheoremReport:
    """Verdicts for every line of the identity chain, evaluated on one cycle.

    Line verdicts that need the second accumulator z1 are None when the
    element two past the minimum is even; then the cycle is the trivial
    one, ``trivial_cycle_flag`` is set, and the final reduction is
    evaluated directly from z0 = m0.

    ``n_case`` is the substitution variable n of the case split
    z1 = 2*z0 - n (a different n than a trajectory start value).
    """

    k: int
    x: int
    y: int
    z0: int
    m0: int
    m2: int
    trivial_cycle_flag: bool
    z1: int | None
    n_case: int | None
    scaled_identity_min: bool
    scaled_identity_third: bool | None
    residual_is_zero: bool | None
    case_identity: bool | None
    offset_ge_k: bool | None
    k_divides_offset: bool | None
    z0_above_twice_offset: bool | None
    z0_below_twice_offset_plus_two: bool | None
    z0_is_odd_midpoint: bool | None
    z0_equals_min: bool
    power_identity: bool

    _LINE_NAMES = (
        "scaled_identity_min",
        "scaled_identity_third",
        "residual_is_zero",
        "case_identity",
        "offset_ge_k",
        "k_divides_offset",
        "z0_above_twice_offset",
        "z0_below_twice_offset_plus_two",
        "z0_is_odd_midpoint",
        "z0_equals_min",
        "power_identity",
    )

    def line_verdicts(self) -> list[tuple[str, bool]]:
        """Evaluated lines only, in derivation order; skipped lines omitted."""
        out = []
        for name in self._LINE_NAMES:
            val = getattr(self, name)
            if val is not None:
                out.append((name, val))
        return out

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "x": self.x,
            "y": self.y,
            "z0": self.z0,
            "z1": self.z1,
            "m0": self.m0,
            "m2": self.m2,
            "n_case": self.n_case,
            "trivial_cycle_flag": self.trivial_cycle_flag,
            "lines": {name: getattr(self, name) for name in self._LINE_NAMES},
        }


def replay_theorem(mc: MinNormalCycle, step_cap: int = DEFAULT_ODD_STEP_CAP) -> TheoremReport:
    """Evaluate the whole identity chain on a min-normal standard-map cycle.

    Decomposes the minimum element m0 = 2k+1 (and the element two past it
    when odd) to obtain the accumulators z0 and z1, then checks each line:
    the two cross-multiplied identities 3**x + z0/(2k+1) = 2**y and
    3**x + z1/(3k+2) = 2**y, the residual, the case identity under
    n = 2*z0 - z1, the order and divisibility claims n >= k and k | n, the
    bracketing z0 in (2n, 2n+2) with midpoint 2n+1, and the final
    reduction z0 = m0 => 3**x + 1 = 2**y.

    Decomposition errors propagate (NotOddError, NotOnCycleError), so a
    synthetic non-cycle input fails there rather than producing verdicts.
    """
    if not mc.map_params.is_standard:
        raise NotStandardMapError(
            f"identity chain replay requires the standard map, got {mc.map_params.label}"
        )
    elems = mc.elements
    m0 = elems[0]
    sig0 = decompose(m0, mc.map_params, step_cap)
    x, y, z0 = sig0.x, sig0.y, sig0.z
    k = (m0 - 1) // 2
    m2 = elems[2 % len(elems)]
    trivial = m2 % 2 == 0

    scaled_min = scaled_identity_gap(x, y, 2 * k + 1, z0) == 0

    z1: int | None = None
    n_case: int | None = None
    scaled_third = residual_zero = case_ident = None
    off_ge_k = k_div = z0_gt = z0_lt = z0_mid = None
    if not trivial:
        sig2 = decompose(m2, mc.map_params, step_cap)
        if (sig2.x, sig2.y) != (x, y):
            raise ValueError(
                f"elements {m0} and {m2} have different traversal shapes; not one cycle"
            )
        z1 = sig2.z
        n_case = case_offset(z0, z1)
        scaled_third = scaled_identity_gap(x, y, 3 * k + 2, z1) == 0
        residual_zero = power_gap_residual(k, z0, z1) == 0
        case_ident = case_identity_gap(k, z0, n_case) == 0
        off_ge_k = n_case >= k
        k_div = divides(k, n_case)
        z0_gt = z0 > 2 * n_case
        z0_lt = z0 < 2 * n_case + 2
        z0_mid = z0 == 2 * n_case + 1

    return TheoremReport(
        k=k,
        x=x,
        y=y,
        z0=z0,
        m0=m0,
        m2=m2,
        trivial_cycle_flag=trivial,
        z1=z1,
        n_case=n_case,
        scaled_identity_min=scaled_min,
        scaled_identity_third=scaled_third,
        residual_is_zero=residual_zero,
        case_identity=case_ident,
        offset_ge_k=off_ge_k,
        k_divides_offset=k_div,
        z0_above_twice_offset=z0_gt,
        z0_below_twice_offset_plus_two=z0_lt,
        z0_is_odd_midpoint=z0_mid,
        z0_equals_min=z0 == m0,
        power_identity=3**x + 1 == (1 << y),
    )
