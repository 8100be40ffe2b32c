"""Insert-only 2-sided range-maximum structures.

``query(X, Y)`` returns the heaviest point with ``x <= X`` and ``y <= Y``.
Two interchangeable backends are provided: a linear scan used as the
reference, and a Fenwick tree over compressed y-coordinates whose nodes keep
a staircase of (x, z) points.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Any, Iterable, NamedTuple, Protocol


class WeightedPoint(NamedTuple):
    x: int
    y: int
    z: int
    payload: Any = None


class RangeMax(Protocol):
    def insert(self, p: WeightedPoint) -> None: ...

    def query(self, X: int, Y: int) -> WeightedPoint | None: ...


class LinearRangeMax:
    """O(1) insert, O(N) query."""

    def __init__(self, ys: Iterable[int] | None = None):
        self.points: list[WeightedPoint] = []

    def __len__(self) -> int:
        return len(self.points)

    def insert(self, p: WeightedPoint) -> None:
        self.points.append(p)

    def query(self, X: int, Y: int) -> WeightedPoint | None:
        best = None
        for p in self.points:
            if p.x <= X and p.y <= Y and (best is None or p.z > best.z):
                best = p
        return best


class FenwickRangeMax:
    """Prefix-max Fenwick tree over y-ranks; each node is an (x, z) staircase.

    The y-coordinates that will ever be inserted must be passed up front;
    x-coordinates are arbitrary.  A node's staircase lists the points of its
    y-range that no other point beats with smaller-or-equal x, so both x and
    z increase along it and the answer for threshold X is the last entry with
    x <= X.  Both operations cost O(log^2 N) plus list maintenance; with
    ever-heavier inserts (as in the grid solver) the maintenance is an
    amortized O(1) truncate-and-append.
    """

    def __init__(self, ys: Iterable[int]):
        self.ys = sorted(set(ys))
        size = len(self.ys)
        self.xs: list[list[int]] = [[] for _ in range(size + 1)]
        self.zs: list[list[int]] = [[] for _ in range(size + 1)]
        self.pts: list[list[WeightedPoint]] = [[] for _ in range(size + 1)]
        self.count = 0

    def __len__(self) -> int:
        return self.count

    def insert(self, p: WeightedPoint) -> None:
        r = bisect_left(self.ys, p.y)
        if r == len(self.ys) or self.ys[r] != p.y:
            raise KeyError(f"y = {p.y} is not in the declared coordinate set")
        self.count += 1
        x, z = p.x, p.z
        i = r + 1
        size = len(self.ys)
        while i <= size:
            xs, zs = self.xs[i], self.zs[i]
            k = bisect_right(xs, x)
            if k and zs[k - 1] >= z:
                # dominated here, hence in every enclosing node as well
                return
            # successors with x' >= x and z' <= z are now useless
            lo = bisect_left(xs, x, 0, k)
            hi = bisect_right(zs, z, lo)
            pts = self.pts[i]
            if hi == len(xs):
                del xs[lo:], zs[lo:], pts[lo:]
                xs.append(x)
                zs.append(z)
                pts.append(p)
            else:
                xs[lo:hi] = (x,)
                zs[lo:hi] = (z,)
                pts[lo:hi] = (p,)
            i += i & -i

    def query(self, X: int, Y: int) -> WeightedPoint | None:
        i = bisect_right(self.ys, Y)
        best = None
        best_z = -1
        while i > 0:
            xs = self.xs[i]
            k = bisect_right(xs, X)
            if k and self.zs[i][k - 1] > best_z:
                best = self.pts[i][k - 1]
                best_z = best.z
            i -= i & -i
        return best


BACKENDS = {"linear": LinearRangeMax, "fenwick": FenwickRangeMax}
