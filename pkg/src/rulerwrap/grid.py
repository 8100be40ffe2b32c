"""Range-max dynamic program, O(n^2 polylog n) time.

A wrapping of the prefix l_1..l_m whose last two sides have sums A and B is
stored as the point (prefix[m] + A, B) with weight prefix[m].  To wrap
l_1..l_i with last side l_{i'+1}..l_i (sum B) we need a wrapping of some
shorter prefix l_1..l_{i''} with A'' <= prefix[i'] - prefix[i''] and
B'' <= B, i.e. a point with x <= prefix[i'] and y <= B; the heaviest such
point gives the smallest new second-to-last side prefix[i'] - prefix[i''].

Wrappings whose first side is empty (A = 0) never enter the grid, because
with closed bounds they would let i'' reach i' and fabricate an empty
interior side.  They are handled directly with a binary search instead.
"""

from __future__ import annotations

import time
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import NamedTuple

from .core import (
    Partition,
    RectangleBound,
    SegmentLengths,
    SolveOutcome,
    SolveStats,
    make_witness,
    pareto_minimal,
)
from .rangemax import BACKENDS, WeightedPoint


class StoredWrapping(NamedTuple):
    m: int
    second_last: int
    last: int
    # (b,) for a two-sided split at b, or (i', predecessor) for an extension
    back: tuple


def boundaries(wr: StoredWrapping) -> list[int]:
    tail = []
    while len(wr.back) == 2:
        ip, pred = wr.back
        tail.extend((wr.m, ip))
        wr = pred
    tail.extend((wr.m, wr.back[0], 0))
    return tail[::-1]


@dataclass
class GridRun:
    lengths: SegmentLengths
    # best[(i', i)]: wrapping of l_1..l_i with last side l_{i'+1}..l_i and
    # the smallest possible second-to-last side
    best: dict[tuple[int, int], StoredWrapping] = field(default_factory=dict)
    points: int = 0
    queries: int = 0
    elapsed_ms: float = 0.0

    def final_candidates(self):
        """(A, B, wrapping) for every way found to finish at segment n."""
        n = self.lengths.n
        pre = self.lengths.prefix
        for b in range(n):
            yield pre[b], pre[n] - pre[b], StoredWrapping(n, pre[b], pre[n] - pre[b], (b,))
        for ip in range(1, n):
            wr = self.best.get((ip, n))
            if wr is not None:
                yield wr.second_last, wr.last, wr


def all_run_sums(prefix) -> set[int]:
    return {prefix[i] - prefix[j] for i in range(len(prefix)) for j in range(i)}


def run_grid(lengths: SegmentLengths, backend: str = "fenwick") -> GridRun:
    started = time.perf_counter()
    pre = lengths.prefix
    n = lengths.n
    grid = BACKENDS[backend](all_run_sums(pre))
    run = GridRun(lengths)
    best = run.best
    queries = points = 0
    for i in range(1, n + 1):
        found = []
        for ip in range(1, i):
            last = pre[i] - pre[ip]
            hit = grid.query(pre[ip], last)
            queries += 1
            z = -1
            pred = None
            if hit is not None:
                z, pred = hit.z, hit.payload
                assert pred.m < ip
            # (empty, l_1..l_k) with k < i' and prefix[k] <= last
            k = bisect_right(pre, last, 0, ip) - 1
            if k >= 1 and pre[k] > z:
                z = pre[k]
                pred = StoredWrapping(k, 0, pre[k], (0,))
            if pred is not None:
                wr = StoredWrapping(i, pre[ip] - z, last, (ip, pred))
                best[ip, i] = wr
                found.append(wr)
        for wr in found:
            grid.insert(WeightedPoint(pre[i] + wr.second_last, wr.last, pre[i], wr))
        for b in range(1, i):
            wr = StoredWrapping(i, pre[b], pre[i] - pre[b], (b,))
            grid.insert(WeightedPoint(pre[i] + pre[b], pre[i] - pre[b], pre[i], wr))
        points += len(found) + i - 1
    run.queries = queries
    run.points = points
    run.elapsed_ms = (time.perf_counter() - started) * 1e3
    return run


def decide_grid(
    lengths: SegmentLengths, bound: RectangleBound, backend: str = "fenwick"
) -> SolveOutcome:
    started = time.perf_counter()
    run = run_grid(lengths, backend)
    stats = SolveStats(points=run.points, queries=run.queries)
    for h, w, _ in bound.orientations():
        for a, b, wr in run.final_candidates():
            if a <= h and b <= w:
                p = Partition.normalize(boundaries(wr))
                witness = make_witness(lengths, p, bound)
                stats.elapsed_ms = (time.perf_counter() - started) * 1e3
                return SolveOutcome(True, witness, stats)
    stats.elapsed_ms = (time.perf_counter() - started) * 1e3
    return SolveOutcome(False, None, stats)


def frontier_grid(
    lengths: SegmentLengths, backend: str = "fenwick"
) -> frozenset[tuple[int, int]]:
    run = run_grid(lengths, backend)
    return pareto_minimal((a, b) for a, b, _ in run.final_candidates())
