"""Timing harness producing one CSV row per solver run."""

from __future__ import annotations

import csv
import random
import statistics
import sys
import time
from typing import Iterable, Iterator, TextIO

from .core import RectangleBound, SegmentLengths, WrapError
from .instance import generate_instance
from .solvers import solve

FIELDS = ("algorithm", "n", "rep", "elapsed_ms", "feasible", "pairs", "points", "queries", "error")


def bench_instance(n: int, rep: int, seed: int, max_len: int = 100):
    sub = random.Random(f"{seed}:{n}:{rep}").getrandbits(32)
    inst = generate_instance(n, max_len, sub)
    return inst.ruler, inst.bound()


def _timed(lengths: SegmentLengths, bound: RectangleBound, algorithm: str):
    started = time.perf_counter()
    outcome = solve(lengths, bound, algorithm, screen=False)
    return outcome, (time.perf_counter() - started) * 1e3


def run_bench(
    sizes: Iterable[int],
    reps: int,
    algorithms: Iterable[str],
    seed: int = 0,
    max_len: int = 100,
    warmup: int = 1,
) -> Iterator[dict]:
    """Rows ordered by (algorithm, n, rep).

    Sizes are interleaved within each rep so that slow drift in machine load
    affects every size alike.
    """
    sizes = list(sizes)
    for algorithm in algorithms:
        rows = {}
        live = []
        for n in sizes:
            try:
                for _ in range(warmup):
                    _timed(*bench_instance(n, 0, seed, max_len), algorithm)
                live.append(n)
            except WrapError as exc:
                rows[n, 0] = dict(algorithm=algorithm, n=n, rep=0, error=str(exc))
        for rep in range(reps):
            for n in live:
                rows[n, rep] = _measure(algorithm, n, rep, seed, max_len)
        for key in sorted(rows):
            yield rows[key]


def _measure(algorithm: str, n: int, rep: int, seed: int, max_len: int) -> dict:
    lengths, bound = bench_instance(n, rep, seed, max_len)
    try:
        outcome, ms = _timed(lengths, bound, algorithm)
    except WrapError as exc:
        return dict(algorithm=algorithm, n=n, rep=rep, error=str(exc))
    s = outcome.stats
    return dict(
        algorithm=algorithm, n=n, rep=rep, elapsed_ms=round(ms, 3),
        feasible=outcome.feasible, pairs=s.pairs, points=s.points,
        queries=s.queries, error="",
    )


def write_csv(rows: Iterable[dict], out: TextIO | None = None) -> None:
    out = out or sys.stdout
    writer = csv.DictWriter(out, fieldnames=FIELDS, restval="")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
        out.flush()


def median_ms(rows: Iterable[dict], algorithm: str, n: int) -> float:
    return statistics.median(
        r["elapsed_ms"] for r in rows if r["algorithm"] == algorithm and r["n"] == n and not r["error"]
    )
