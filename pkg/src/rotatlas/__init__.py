"""rotatlas: exact partition of the rotation-parameter interval (-2,2).

For an integer initial pair, every rational parameter in (-2,2) drives a
round-off rotation on the integer lattice; the parameters sharing one
periodic cycle form an exact rational interval, and finitely many such
intervals plus an explicit infinite tail near -2 cover the whole range.
This package computes, verifies and renders those partitions with exact
rational arithmetic end to end.
"""

from .constraints import HalfLineConstraint, constraints_for_cycle, interval_for_cycle
from .dynamics import (
    DEFAULT_ORBIT_CAP,
    OrbitResult,
    ParamSpec,
    canonical_rotation,
    detect_cycle,
    is_cyclic_palindrome,
    rotation_equal,
    step,
    step_inverse,
    word_is_cycle_at,
)
from .intervals import Interval, IntervalSet, Rational, make_interval, parse_interval, parse_rational
from .partition import (
    BudgetExceeded,
    Caps,
    OrbitCapExceeded,
    PartitionAtlas,
    PointSummary,
    ShellStats,
    SweepReport,
    VerificationReport,
    compute_atlas,
    summarize_atlas,
    sweep,
    verify_atlas,
)
from .tail import (
    Label,
    TailDescription,
    label_of,
    occurrence_index,
    tail_of,
    triangular,
    triangular_cycle,
    z_interval,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ORBIT_CAP",
    "BudgetExceeded",
    "Caps",
    "HalfLineConstraint",
    "Interval",
    "IntervalSet",
    "Label",
    "OrbitCapExceeded",
    "OrbitResult",
    "ParamSpec",
    "PartitionAtlas",
    "PointSummary",
    "Rational",
    "ShellStats",
    "SweepReport",
    "TailDescription",
    "VerificationReport",
    "canonical_rotation",
    "compute_atlas",
    "constraints_for_cycle",
    "detect_cycle",
    "interval_for_cycle",
    "is_cyclic_palindrome",
    "label_of",
    "make_interval",
    "occurrence_index",
    "parse_interval",
    "parse_rational",
    "rotation_equal",
    "step",
    "step_inverse",
    "summarize_atlas",
    "sweep",
    "tail_of",
    "triangular",
    "triangular_cycle",
    "verify_atlas",
    "word_is_cycle_at",
    "z_interval",
]
