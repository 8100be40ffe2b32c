"""Instance files (JSON and two-line text) and the random instance generator."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .core import InvalidInstance, RectangleBound, SegmentLengths, WrapError

INT64_MAX = 2**63 - 1


class ParseError(WrapError):
    pass


@dataclass(frozen=True)
class InstanceFile:
    lengths: tuple[int, ...]
    height: int
    width: int
    name: str | None = None
    seed: int | None = None

    @property
    def ruler(self) -> SegmentLengths:
        return SegmentLengths(self.lengths)

    def bound(self, allow_rotate: bool = False) -> RectangleBound:
        return RectangleBound(self.height, self.width, allow_rotate)


def _check(lengths, height, width, where) -> None:
    for what, v in (("height", height), ("width", width)):
        if v < 0:
            raise ParseError(f"{where(what)}: {what} must be >= 0, got {v}")
        if v > INT64_MAX:
            raise ParseError(f"{where(what)}: {what} {v} overflows 64 bits")
    for k, v in enumerate(lengths):
        if v < 1:
            raise ParseError(f"{where('lengths')}: non-positive length {v} at position {k + 1}")
    try:
        SegmentLengths(lengths)
    except InvalidInstance as exc:
        raise ParseError(f"{where('lengths')}: {exc}") from None


def _parse_text(text: str) -> InstanceFile:
    lines = [(k + 1, line.split()) for k, line in enumerate(text.splitlines())]
    lines = [(k, toks) for k, toks in lines if toks]
    if len(lines) != 2:
        raise ParseError(f"expected 2 non-empty lines, found {len(lines)}")
    (l1, head), (l2, body) = lines
    try:
        nums = [int(tok) for tok in head]
    except ValueError:
        raise ParseError(f"line {l1}: expected integers 'n h w', got {' '.join(head)!r}") from None
    if len(nums) != 3:
        raise ParseError(f"line {l1}: expected 3 integers 'n h w', got {len(nums)}")
    n, h, w = nums
    try:
        lengths = tuple(int(tok) for tok in body)
    except ValueError:
        raise ParseError(f"line {l2}: lengths must be integers") from None
    if len(lengths) != n:
        raise ParseError(f"line {l2}: header says n = {n} but {len(lengths)} lengths follow")
    _check(lengths, h, w, lambda what: f"line {l2 if what == 'lengths' else l1}")
    return InstanceFile(lengths, h, w)


def _json_int(obj, key, where="field"):
    v = obj.get(key) if isinstance(obj, dict) else None
    if type(v) is not int:
        raise ParseError(f"{where} {key!r}: expected an integer, got {v!r}")
    return v


def _parse_json(text: str) -> InstanceFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    raw = obj.get("lengths")
    if not isinstance(raw, list) or not raw:
        raise ParseError("field 'lengths': expected a non-empty array of integers")
    for k, v in enumerate(raw):
        if type(v) is not int:
            raise ParseError(f"field 'lengths'[{k}]: expected an integer, got {v!r}")
    h = _json_int(obj, "height")
    w = _json_int(obj, "width")
    _check(raw, h, w, lambda what: f"field {what!r}")
    name = obj.get("name")
    seed = obj.get("seed")
    return InstanceFile(tuple(raw), h, w, name, seed)


def detect_format(data: str) -> str:
    return "json" if data.lstrip().startswith("{") else "text"


def parse_instance(data: bytes | str, fmt: str | None = None) -> InstanceFile:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8 ({exc})") from None
    fmt = fmt or detect_format(data)
    if fmt == "json":
        return _parse_json(data)
    if fmt == "text":
        return _parse_text(data)
    raise ParseError(f"unknown format {fmt!r}")


def serialize_instance(inst: InstanceFile, fmt: str = "json") -> str:
    if fmt == "text":
        return f"{len(inst.lengths)} {inst.height} {inst.width}\n{' '.join(map(str, inst.lengths))}\n"
    obj = {"lengths": list(inst.lengths), "height": inst.height, "width": inst.width}
    if inst.name is not None:
        obj["name"] = inst.name
    if inst.seed is not None:
        obj["seed"] = inst.seed
    return json.dumps(obj) + "\n"


def generate_instance(n: int, max_len: int, seed: int) -> InstanceFile:
    """Random ruler whose rectangle sits near the feasibility boundary.

    The width is the sum of a random suffix and the height that of the run
    just before it, each nudged by up to half of ``max_len``.
    """
    if n < 1 or max_len < 1:
        raise InvalidInstance(f"need n >= 1 and max_len >= 1, got n={n}, max_len={max_len}")
    rng = random.Random(seed)
    lengths = tuple(rng.randint(1, max_len) for _ in range(n))
    pre = SegmentLengths(lengths).prefix
    b = rng.randrange(n)
    a = rng.randint(0, b)
    jitter = max_len // 2
    width = max(0, pre[n] - pre[b] + rng.randint(-jitter, jitter))
    height = max(0, pre[b] - pre[a] + rng.randint(-jitter, jitter))
    return InstanceFile(lengths, height, width, f"random-n{n}-L{max_len}", seed)
