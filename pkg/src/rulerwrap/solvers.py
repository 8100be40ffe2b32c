"""One entry point per task, dispatching on the algorithm name."""

from __future__ import annotations

import time

from .core import (
    RectangleBound,
    SegmentLengths,
    SolveOutcome,
    SolveStats,
    WrapWitness,
    quick_infeasible,
)
from .grid import decide_grid, frontier_grid
from .oracle import brute_force_decide
from .quartic import build_table, decide_quartic, frontier_quartic

ALGORITHMS = ("grid", "quartic", "brute")


def solve(
    lengths: SegmentLengths,
    bound: RectangleBound,
    algorithm: str = "grid",
    screen: bool = True,
) -> SolveOutcome:
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if screen and quick_infeasible(lengths, bound):
        return SolveOutcome(False)
    if algorithm == "grid":
        return decide_grid(lengths, bound)
    if algorithm == "quartic":
        return decide_quartic(build_table(lengths), lengths, bound)
    started = time.perf_counter()
    report = brute_force_decide(lengths, bound)
    stats = SolveStats(elapsed_ms=(time.perf_counter() - started) * 1e3)
    return SolveOutcome(report.feasible, report.witness, stats)


def frontier(lengths: SegmentLengths, algorithm: str = "grid") -> list[tuple[int, int]]:
    """Pareto-minimal (second-to-last, last) side pairs, sorted."""
    if algorithm == "grid":
        pairs = frontier_grid(lengths)
    elif algorithm == "quartic":
        pairs = frontier_quartic(build_table(lengths))
    elif algorithm == "brute":
        pairs = brute_force_decide(lengths, RectangleBound(0, 0)).frontier
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return sorted(pairs)


def result_record(outcome: SolveOutcome, algorithm: str) -> dict:
    w: WrapWitness | None = outcome.witness
    rec = {
        "feasible": outcome.feasible,
        "algorithm": algorithm,
        "rotated": bool(w and w.rotated),
    }
    if w is not None:
        rec["breakpoints"] = list(w.breakpoints)
        rec["side_sums"] = list(w.side_sums)
    s = outcome.stats
    rec["counters"] = {"pairs": s.pairs, "points": s.points, "queries": s.queries}
    rec["elapsed_ms"] = round(s.elapsed_ms, 3)
    return rec
