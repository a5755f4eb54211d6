"""Trajectories, cycle censuses, odd-step signatures, and power-gap
arithmetic for Collatz-style maps, over exact arbitrary-precision integers."""

from .core import (
    DEFAULT_STEP_CAP,
    DEFAULT_VALUE_CAP,
    FIVE_N_PLUS_ONE,
    MapParams,
    PRESET_MAPS,
    STANDARD,
    THREE_N_MINUS_ONE,
    StopReason,
    TrajectoryRecord,
    iterate,
    odd_successor,
    step,
    trajectory,
    v2,
)
from .cycles import (
    Cycle,
    CycleDetection,
    MinNormalCycle,
    PropertyCheck,
    PropertyReport,
    Verdict,
    check_preliminaries,
    detect_cycle,
    min_normalize,
)
from .diophantine import (
    PowGapSolutionSet,
    TheoremReport,
    case_identity_gap,
    case_offset,
    catalan_check,
    divides,
    enumerate_pow_gap,
    power_gap_residual,
    replay_theorem,
    scaled_identity_gap,
)
from .errors import CapExhaustedError, NotOddError, NotOnCycleError, NotStandardMapError
from .search import (
    CycleSearchReport,
    RangeVerificationReport,
    find_cycles,
    verify_range,
)
from .signature import (
    CycleSignature,
    DEFAULT_ODD_STEP_CAP,
    decompose,
    signatures_for_cycle,
    verify_signature,
)

__version__ = "0.1.0"

__all__ = [
    "CapExhaustedError",
    "Cycle",
    "CycleDetection",
    "CycleSearchReport",
    "CycleSignature",
    "DEFAULT_ODD_STEP_CAP",
    "DEFAULT_STEP_CAP",
    "DEFAULT_VALUE_CAP",
    "FIVE_N_PLUS_ONE",
    "MapParams",
    "MinNormalCycle",
    "NotOddError",
    "NotOnCycleError",
    "NotStandardMapError",
    "PRESET_MAPS",
    "PowGapSolutionSet",
    "PropertyCheck",
    "PropertyReport",
    "RangeVerificationReport",
    "STANDARD",
    "StopReason",
    "THREE_N_MINUS_ONE",
    "TheoremReport",
    "TrajectoryRecord",
    "Verdict",
    "case_identity_gap",
    "case_offset",
    "catalan_check",
    "check_preliminaries",
    "decompose",
    "detect_cycle",
    "divides",
    "enumerate_pow_gap",
    "find_cycles",
    "iterate",
    "min_normalize",
    "odd_successor",
    "power_gap_residual",
    "replay_theorem",
    "scaled_identity_gap",
    "signatures_for_cycle",
    "step",
    "trajectory",
    "v2",
    "verify_range",
    "verify_signature",
]
