"""Pair-list dynamic program, O(n^4) time.

For every prefix l_1..l_i we keep the pairs (k1, k2) such that the prefix can
be wrapped with last side exactly k2 (ending at segment i) and second-to-last
side exactly k1.  An entry is identified by the index pair (a, b) with
k2 = prefix[i] - prefix[b] and k1 = prefix[b] - prefix[a].
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import NamedTuple

from .core import (
    BudgetExceeded,
    Partition,
    RectangleBound,
    SegmentLengths,
    SolveOutcome,
    SolveStats,
    WrapError,
    make_witness,
    pareto_minimal,
)

DEFAULT_MAX_N = 150


class PairEntry(NamedTuple):
    k1: int
    k2: int
    a: int
    b: int
    # None for a two-sided base wrapping split at b, else (i', position in list i')
    back: tuple[int, int] | None


@dataclass
class PairList:
    entries: list[PairEntry] = field(default_factory=list)
    k1s: list[int] = field(default_factory=list)
    index: dict[tuple[int, int], int] = field(default_factory=dict)

    def add(self, entry: PairEntry) -> bool:
        key = (entry.a, entry.b)
        if key in self.index:
            return False
        self.index[key] = len(self.entries)
        self.entries.append(entry)
        self.k1s.append(entry.k1)
        return True

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass
class WrapTable:
    prefix: tuple[int, ...]
    lists: list[PairList]  # lists[0] is an unused placeholder
    elapsed_ms: float = 0.0

    @property
    def n(self) -> int:
        return len(self.prefix) - 1

    @property
    def pairs(self) -> int:
        return sum(len(lst) for lst in self.lists)

    def decode(self, i: int, k1: int, k2: int) -> tuple[int, int]:
        """Recover (a, b) for a pair in list i by inverting the prefix sums."""
        where = {v: k for k, v in enumerate(self.prefix)}
        b = where[self.prefix[i] - k2]
        a = where[self.prefix[b] - k1]
        return a, b

    def breakpoints(self, i: int, j: int) -> list[int]:
        """Cut list of the wrapping behind entry j of list i (may need normalizing)."""
        tail = []
        while True:
            e = self.lists[i].entries[j]
            tail.append(i)
            if e.back is None:
                tail.extend((e.b, 0))
                return tail[::-1]
            i, j = e.back


def build_table(lengths: SegmentLengths, max_n: int = DEFAULT_MAX_N) -> WrapTable:
    n = lengths.n
    if n > max_n:
        raise BudgetExceeded(f"n = {n} exceeds the pair-list limit of {max_n}")
    started = time.perf_counter()
    pre = lengths.prefix
    lists = [PairList()]
    for i in range(1, n + 1):
        cur = PairList()
        for b in range(i):
            cur.add(PairEntry(pre[b], pre[i] - pre[b], 0, b, None))
        index = cur.index
        for ip in range(1, i):
            last = pre[i] - pre[ip]
            prev = lists[ip]
            entries = prev.entries
            for j, k1 in enumerate(prev.k1s):
                if k1 <= last:
                    e = entries[j]
                    if (e.b, ip) not in index:
                        cur.add(PairEntry(e.k2, last, e.b, ip, (ip, j)))
        lists.append(cur)
    table = WrapTable(pre, lists)
    table.elapsed_ms = (time.perf_counter() - started) * 1e3
    return table


def decide_quartic(
    table: WrapTable, lengths: SegmentLengths, bound: RectangleBound
) -> SolveOutcome:
    if table.prefix != lengths.prefix:
        raise WrapError(f"table was built for a different ruler (n = {table.n})")
    started = time.perf_counter()
    n = table.n
    stats = SolveStats(pairs=table.pairs)
    for h, w, _ in bound.orientations():
        for j, e in enumerate(table.lists[n].entries):
            if e.k1 <= h and e.k2 <= w:
                p = Partition.normalize(table.breakpoints(n, j))
                witness = make_witness(lengths, p, bound)
                stats.elapsed_ms = table.elapsed_ms + (time.perf_counter() - started) * 1e3
                return SolveOutcome(True, witness, stats)
    stats.elapsed_ms = table.elapsed_ms + (time.perf_counter() - started) * 1e3
    return SolveOutcome(False, None, stats)


def frontier_quartic(table: WrapTable) -> frozenset[tuple[int, int]]:
    return pareto_minimal((e.k1, e.k2) for e in table.lists[table.n])
