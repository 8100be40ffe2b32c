import xml.etree.ElementTree as ET

import pytest

from rulerwrap.core import Partition, WrapError, WrapWitness
from rulerwrap.svg import render_svg, wrap_polyline

NS = "{http://www.w3.org/2000/svg}"


def witness(sides):
    cuts = [0]
    for s in sides:
        cuts.append(cuts[-1] + (1 if s else 0))
    return WrapWitness(Partition(cuts), tuple(sides))


def rendered_points(doc):
    root = ET.fromstring(doc)
    pts = []
    for line in root.iter(NS + "polyline"):
        for pair in line.get("points").split():
            x, y = map(float, pair.split(","))
            pts.append((x, y))
    return root, pts


def test_spiral_corners():
    assert wrap_polyline((1, 1, 2, 2, 3, 3)) == [(0, 0), (0, 1), (1, 1), (1, -1), (-1, -1), (-1, 2), (2, 2)]


def test_empty_first_side():
    assert wrap_polyline((0, 2, 1, 3)) == [(0, 0), (-2, 0), (-2, 1), (1, 1)]


def test_closed_square():
    pts = wrap_polyline((2, 2, 2, 2))
    assert pts[-1] == (0, 0)


@pytest.mark.parametrize("sides, size", [((1, 1, 2, 2, 3, 3), (3, 3)), ((0, 2, 1, 3), (3, 1)), ((2, 2, 2, 2), (2, 2))])
def test_document(sides, size):
    doc = render_svg(witness(sides))
    root, pts = rendered_points(doc)
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    assert (max(xs) - min(xs), max(ys) - min(ys)) == size
    lines = list(root.iter(NS + "polyline"))
    assert len(lines) == sum(1 for s in sides if s)
    assert len({ln.get("stroke") for ln in lines}) == 2
    vx, vy, vw, vh = map(float, root.get("viewBox").split())
    big = max(size)
    assert vw == pytest.approx(size[0] + 0.1 * big)
    assert vh == pytest.approx(size[1] + 0.1 * big)
    assert float(root.find(NS + "g").get("stroke-width")) == pytest.approx(0.02 * big)


def test_y_axis_is_flipped():
    _, pts = rendered_points(render_svg(witness((1, 1))))
    # first side points up in math coordinates, so down the page is negative
    assert pts[:2] == [(0.0, 0.0), (0.0, -1.0)]


def test_invalid_witness_rejected():
    with pytest.raises(WrapError):
        render_svg(WrapWitness(Partition([0, 1, 2, 3, 4]), (3, 1, 1, 1)))
