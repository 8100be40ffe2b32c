"""Rectangular ruler wrapping: decide, witness and enumerate 90-degree wrappings."""

from .core import (
    BudgetExceeded,
    InvalidInstance,
    InvalidPartition,
    Partition,
    RectangleBound,
    SegmentLengths,
    SolveOutcome,
    Validation,
    VerificationError,
    Verdict,
    WrapError,
    WrapWitness,
    quick_infeasible,
    side_sums,
    validate_wrapping,
)
from .grid import decide_grid, frontier_grid
from .oracle import brute_force_decide, enumerate_partitions
from .quartic import build_table, decide_quartic, frontier_quartic
from .solvers import frontier, solve

__all__ = [
    "BudgetExceeded",
    "InvalidInstance",
    "InvalidPartition",
    "Partition",
    "RectangleBound",
    "SegmentLengths",
    "SolveOutcome",
    "Validation",
    "VerificationError",
    "Verdict",
    "WrapError",
    "WrapWitness",
    "brute_force_decide",
    "build_table",
    "decide_grid",
    "decide_quartic",
    "enumerate_partitions",
    "frontier",
    "frontier_grid",
    "frontier_quartic",
    "quick_infeasible",
    "side_sums",
    "solve",
    "validate_wrapping",
]
