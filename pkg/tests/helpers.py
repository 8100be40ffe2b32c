import random

from hypothesis import strategies as st

from rulerwrap.core import RectangleBound, SegmentLengths


def boundary_values(total):
    return [0, 1, max(total - 1, 0), total]


def random_instance(rng: random.Random, max_n=12, max_len=8):
    n = rng.randint(1, max_n)
    lengths = SegmentLengths(rng.randint(1, max_len) for _ in range(n))
    total = lengths.total
    pick = lambda: rng.choice(boundary_values(total) + [rng.randint(0, total)])
    bound = RectangleBound(pick(), pick(), rng.random() < 0.25)
    return lengths, bound


@st.composite
def rulers(draw, max_n=9, max_len=8):
    return SegmentLengths(draw(st.lists(st.integers(1, max_len), min_size=1, max_size=max_n)))


@st.composite
def instances(draw, max_n=9, max_len=8):
    lengths = draw(rulers(max_n, max_len))
    total = lengths.total
    side = st.one_of(st.sampled_from(boundary_values(total)), st.integers(0, total))
    return lengths, RectangleBound(draw(side), draw(side), draw(st.booleans()))
