import math

import pytest
from hypothesis import strategies as st

from geometry.primitives import Point, Rect
from services.datasets import random_rectangles, uniform_points

# Dyadic coordinates keep every sum and difference exact, which also makes
# distance ties common enough to exercise the tie rule.
coordinate = st.integers(min_value=-512, max_value=512).map(lambda v: v / 8)


@st.composite
def general_position_points(draw, min_size=0, max_size=40):
    pairs = draw(st.lists(
        st.tuples(coordinate, coordinate),
        min_size=min_size,
        max_size=max_size,
        unique_by=(lambda t: t[0], lambda t: t[1]),
    ))
    return [Point(x, y) for x, y in pairs]


@st.composite
def rectangles(draw, lo=-70.0, hi=70.0):
    xs = draw(st.lists(st.floats(lo, hi, allow_nan=False), min_size=2, max_size=2, unique=True))
    ys = draw(st.lists(st.floats(lo, hi, allow_nan=False), min_size=2, max_size=2, unique=True))
    return Rect(min(xs), max(xs), min(ys), max(ys))


def scan(points, rect):
    return [p for p in points if rect.contains(p)]


def lex_smallest_pair(points):
    """All-pairs scan with the (distance, lo, hi) rule, independent of numpy"""
    best = None
    for i, p in enumerate(points):
        for q in points[i + 1:]:
            lo, hi = (p, q) if p < q else (q, p)
            key = (math.hypot(p.x - q.x, p.y - q.y), lo, hi)
            if best is None or key < best:
                best = key
    return best


@pytest.fixture
def small_points():
    return [Point(0.5, 0.5), Point(2.1, 1.3), Point(9.0, 9.0), Point(10.0, 11.0), Point(-5.0, 7.0)]


@pytest.fixture(scope="session")
def uniform_1024():
    return uniform_points(1024, seed=42)


@pytest.fixture(scope="session")
def queries_1024(uniform_1024):
    return random_rectangles(uniform_1024, 300, (1.0, 32.0), seed=7)
