"""Static SVG drawing of a wrapped ruler."""

from __future__ import annotations

from typing import Sequence

from .core import WrapError, WrapWitness, chain_ok

COLORS = ("#1f77b4", "#d62728")

# unit directions in math orientation, counter-clockwise order
_DIRS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def wrap_polyline(sides: Sequence[int]) -> list[tuple[int, int]]:
    """Corner points of the wrapped ruler, starting at the origin.

    The last side points along +x and every hinge turns 90 degrees clockwise,
    so side j points along the direction t - j quarter turns counter-clockwise
    of +x.  An empty first side adds no corner.
    """
    t = len(sides)
    pts = [(0, 0)]
    x = y = 0
    for j, s in enumerate(sides, start=1):
        if s == 0:
            continue
        dx, dy = _DIRS[(t - j) % 4]
        x, y = x + dx * s, y + dy * s
        pts.append((x, y))
    return pts


def bounding_box(points) -> tuple[float, float, float, float]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def render_svg(witness: WrapWitness) -> str:
    sides = witness.side_sums
    if len(sides) < 2 or len(sides) % 2 or not chain_ok(sides) or any(s < 1 for s in sides[1:]):
        raise WrapError(f"cannot draw invalid witness with sides {sides}")
    pts = wrap_polyline(sides)
    x0, y0, x1, y1 = bounding_box(pts)
    big = max(x1 - x0, y1 - y0)
    margin = 0.05 * big
    stroke = 0.02 * big
    # flip y for the SVG y-down convention
    view = (x0 - margin, -y1 - margin, x1 - x0 + 2 * margin, y1 - y0 + 2 * margin)
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{" ".join(_num(v) for v in view)}">',
        f'<g fill="none" stroke-width="{_num(stroke)}" stroke-linecap="square">',
    ]
    k = 0
    for j, s in enumerate(sides, start=1):
        if s == 0:
            continue
        (ax, ay), (bx, by) = pts[k], pts[k + 1]
        k += 1
        out.append(
            f'<polyline data-side="{j}" stroke="{COLORS[j % 2]}" '
            f'points="{_num(ax)},{_num(-ay)} {_num(bx)},{_num(-by)}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _num(v) -> str:
    v = float(v)
    return str(int(v)) if v.is_integer() else f"{v:.6g}"
