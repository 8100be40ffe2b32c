"""Exhaustive reference solver: tries every composition of the ruler."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (
    BudgetExceeded,
    Partition,
    RectangleBound,
    SegmentLengths,
    WrapWitness,
    chain_ok,
    pareto_minimal,
    sides_fit,
)

MAX_N = 24


@dataclass(frozen=True)
class OracleReport:
    feasible: bool
    witness: WrapWitness | None
    examined: int
    frontier: frozenset[tuple[int, int]]


def _check_budget(n: int) -> None:
    if n < 1:
        raise BudgetExceeded("the oracle needs at least one segment")
    if n > MAX_N:
        raise BudgetExceeded(f"n = {n} exceeds the oracle limit of {MAX_N}")


def enumerate_partitions(lengths: SegmentLengths) -> Iterator[Partition]:
    """Every composition, gap subsets in increasing binary order.

    Bit g of the mask cuts the hinge after segment g + 1.  Odd run counts get
    an empty first side.
    """
    n = lengths.n
    _check_budget(n)
    for mask in range(1 << (n - 1)):
        cuts = [0]
        for g in range(n - 1):
            if mask >> g & 1:
                cuts.append(g + 1)
        cuts.append(n)
        if len(cuts) % 2 == 0:  # odd number of runs
            cuts.insert(0, 0)
        yield Partition(cuts)


def brute_force_decide(lengths: SegmentLengths, bound: RectangleBound) -> OracleReport:
    pre = lengths.prefix
    witness = None
    examined = 0
    reachable = []
    for p in enumerate_partitions(lengths):
        examined += 1
        bps = p.breakpoints
        sides = [pre[bps[j]] - pre[bps[j - 1]] for j in range(1, len(bps))]
        if chain_ok(sides):
            reachable.append((sides[-2], sides[-1]))
        if witness is None:
            for h, w, rotated in bound.orientations():
                if sides_fit(sides, h, w):
                    witness = WrapWitness(p, tuple(sides), rotated)
                    break
    return OracleReport(witness is not None, witness, examined, pareto_minimal(reachable))
