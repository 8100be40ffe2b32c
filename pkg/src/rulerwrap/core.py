"""Problem types for rectangular ruler wrapping and the independent witness checker.

A ruler with segment lengths l_1..l_n is wrapped by folding chosen hinges 90
degrees clockwise.  Combinatorially a wrapping is a split of the lengths into
consecutive sides S_1..S_t (t even, only S_1 may be empty) whose sums satisfy

    s_j <= s_{j+2}   for 1 <= j <= t-2,
    s_{t-1} <= h,    s_t <= w.

Everything in this module is immutable and side-effect free.
"""

from __future__ import annotations

import enum
import operator
from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Iterable, Sequence

MAX_TOTAL = 2**61


class WrapError(ValueError):
    """Base class for every error raised by this package."""


class InvalidInstance(WrapError):
    pass


class InvalidPartition(WrapError):
    """Breakpoints that do not describe a well-formed partition."""


class BudgetExceeded(WrapError):
    """An input is too large for the chosen solver."""


class VerificationError(WrapError):
    """A solver produced a witness that does not check out."""


def _as_int(value, what: str) -> int:
    if isinstance(value, bool):
        raise InvalidInstance(f"{what} must be an integer, got {value!r}")
    try:
        return operator.index(value)
    except TypeError:
        raise InvalidInstance(f"{what} must be an integer, got {value!r}") from None


@dataclass(frozen=True)
class SegmentLengths:
    """Positive integer segment lengths together with their prefix sums.

    ``prefix[i]`` is ``l_1 + ... + l_i`` and ``prefix[0] == 0``.
    """

    lengths: tuple[int, ...]
    prefix: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, lengths: Iterable[int]):
        values = tuple(_as_int(v, f"length #{k + 1}") for k, v in enumerate(lengths))
        if not values:
            raise InvalidInstance("a ruler needs at least one segment")
        for k, v in enumerate(values):
            if v < 1:
                raise InvalidInstance(f"length #{k + 1} is {v}; lengths must be >= 1")
        prefix = (0, *accumulate(values))
        if prefix[-1] > MAX_TOTAL:
            raise InvalidInstance(f"total length {prefix[-1]} exceeds 2**61")
        object.__setattr__(self, "lengths", values)
        object.__setattr__(self, "prefix", prefix)

    def __len__(self) -> int:
        return len(self.lengths)

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def total(self) -> int:
        return self.prefix[-1]

    def run(self, a: int, b: int) -> int:
        """Sum of l_{a+1}..l_b."""
        return self.prefix[b] - self.prefix[a]

    def index_of_prefix(self, value: int) -> int:
        """Inverse of ``prefix``; raises KeyError when ``value`` is not a prefix sum."""
        k = bisect_left(self.prefix, value)
        if k == len(self.prefix) or self.prefix[k] != value:
            raise KeyError(value)
        return k

    def scaled(self, c: int) -> SegmentLengths:
        return SegmentLengths(v * c for v in self.lengths)


@dataclass(frozen=True)
class RectangleBound:
    height: int
    width: int
    allow_rotate: bool = False

    def __post_init__(self):
        h = _as_int(self.height, "height")
        w = _as_int(self.width, "width")
        if h < 0 or w < 0:
            raise InvalidInstance(f"rectangle ({h}, {w}) has a negative side")
        object.__setattr__(self, "height", h)
        object.__setattr__(self, "width", w)

    def swapped(self) -> RectangleBound:
        return RectangleBound(self.width, self.height, self.allow_rotate)

    def orientations(self) -> list[tuple[int, int, bool]]:
        """(h, w, rotated) combinations to try, as-given first."""
        out = [(self.height, self.width, False)]
        if self.allow_rotate:
            out.append((self.width, self.height, True))
        return out


@dataclass(frozen=True)
class Partition:
    """Breakpoints b_0..b_t; side S_j covers segments b_{j-1}+1..b_j."""

    breakpoints: tuple[int, ...]

    def __init__(self, breakpoints: Iterable[int]):
        bps = tuple(operator.index(b) for b in breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        t = len(bps) - 1
        if t < 2 or t % 2:
            raise InvalidPartition(f"need an even number >= 2 of sides, got {t}")
        if bps[0] != 0:
            raise InvalidPartition(f"first breakpoint must be 0, got {bps[0]}")
        if bps[1] < 0:
            raise InvalidPartition("breakpoints must be non-negative")
        for j in range(1, t):
            if bps[j] >= bps[j + 1]:
                raise InvalidPartition(
                    f"side {j + 1} is empty or reversed ({bps[j]} -> {bps[j + 1]})"
                )

    @property
    def t(self) -> int:
        return len(self.breakpoints) - 1

    @property
    def n(self) -> int:
        return self.breakpoints[-1]

    @classmethod
    def normalize(cls, cuts: Sequence[int]) -> Partition:
        """Build a partition from any increasing cut list starting at 0.

        A leading empty side is dropped or added so the side count is even.
        """
        cuts = list(cuts)
        if len(cuts) >= 2 and cuts[0] == cuts[1] == 0:
            cuts.pop(0)
        if (len(cuts) - 1) % 2:
            cuts.insert(0, 0)
        return cls(cuts)


def side_sums(lengths: SegmentLengths, p: Partition) -> tuple[int, ...]:
    bps = p.breakpoints
    if bps[-1] != lengths.n:
        raise InvalidPartition(f"last breakpoint {bps[-1]} != n = {lengths.n}")
    pre = lengths.prefix
    return tuple(pre[bps[j]] - pre[bps[j - 1]] for j in range(1, len(bps)))


def chain_violations(sides: Sequence[int], h: int, w: int) -> list[str]:
    """Constraints broken by a side-sum sequence (any length >= 1)."""
    out = []
    t = len(sides)
    for j in range(t - 2):
        if sides[j] > sides[j + 2]:
            out.append(f"s{j + 1}={sides[j]} > s{j + 3}={sides[j + 2]}")
    if t >= 2 and sides[-2] > h:
        out.append(f"s{t - 1}={sides[-2]} > h={h}")
    if sides[-1] > w:
        out.append(f"s{t}={sides[-1]} > w={w}")
    return out


def sides_fit(sides: Sequence[int], h: int, w: int) -> bool:
    t = len(sides)
    for j in range(t - 2):
        if sides[j] > sides[j + 2]:
            return False
    return (t < 2 or sides[-2] <= h) and sides[-1] <= w


def chain_ok(sides: Sequence[int]) -> bool:
    """Only the s_j <= s_{j+2} constraints, ignoring the rectangle."""
    return all(sides[j] <= sides[j + 2] for j in range(len(sides) - 2))


class Verdict(enum.Enum):
    VALID = "valid"
    VALID_ROTATED = "valid-rotated"
    INVALID = "invalid"


@dataclass(frozen=True)
class Validation:
    verdict: Verdict
    sides: tuple[int, ...]
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.INVALID

    @property
    def rotated(self) -> bool:
        return self.verdict is Verdict.VALID_ROTATED

    def __bool__(self) -> bool:
        return self.ok


def validate_wrapping(
    lengths: SegmentLengths, p: Partition, bound: RectangleBound
) -> Validation:
    sides = side_sums(lengths, p)
    problems = chain_violations(sides, bound.height, bound.width)
    if not problems:
        return Validation(Verdict.VALID, sides)
    if bound.allow_rotate and sides_fit(sides, bound.width, bound.height):
        return Validation(Verdict.VALID_ROTATED, sides)
    return Validation(Verdict.INVALID, sides, tuple(problems))


def quick_infeasible(lengths: SegmentLengths, bound: RectangleBound) -> bool:
    """Cheap screen; True means certainly infeasible, False means nothing."""
    h, w = bound.height, bound.width
    if lengths.n and max(lengths.lengths) > max(h, w):
        return True
    # the last side always holds at least one segment
    if w == 0 and (h == 0 or not bound.allow_rotate):
        return True
    return False


def pareto_minimal(pairs: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    """Pairs not dominated componentwise (<=) by a different pair."""
    out = []
    best_second = None
    for a, b in sorted(set(pairs)):
        if best_second is None or b < best_second:
            out.append((a, b))
            best_second = b
    return frozenset(out)


@dataclass(frozen=True)
class WrapWitness:
    partition: Partition
    side_sums: tuple[int, ...]
    rotated: bool = False

    @property
    def breakpoints(self) -> tuple[int, ...]:
        return self.partition.breakpoints


def make_witness(
    lengths: SegmentLengths, p: Partition, bound: RectangleBound
) -> WrapWitness:
    """Check ``p`` against ``bound`` and wrap it as a witness.

    Raises VerificationError when the partition does not fit, which always
    means a solver bug.
    """
    check = validate_wrapping(lengths, p, bound)
    if not check.ok:
        raise VerificationError(
            f"witness {p.breakpoints} rejected: {'; '.join(check.violations)}"
        )
    return WrapWitness(p, check.sides, check.rotated)


@dataclass
class SolveStats:
    pairs: int = 0
    points: int = 0
    queries: int = 0
    elapsed_ms: float = 0.0


@dataclass(frozen=True)
class SolveOutcome:
    feasible: bool
    witness: WrapWitness | None = None
    stats: SolveStats = field(default_factory=SolveStats)

    def __post_init__(self):
        if self.feasible != (self.witness is not None):
            raise ValueError("feasible outcomes carry a witness, infeasible ones do not")
