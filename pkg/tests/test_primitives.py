import math

import pytest

from exceptions import GeneralPositionError, GeometryError
from geometry.primitives import (
    Orientation,
    Point,
    Quadrant,
    Rect,
    check_general_position,
    distance,
    packing_threshold,
    pair_key,
    quadrant_contains,
)


def test_distance_examples():
    assert distance(Point(0, 0), Point(3, 4)) == 5
    assert distance(Point(1, 1), Point(1, 1)) == 0
    assert distance(Point(0, 0), Point(1, 2)) == pytest.approx(2.2360679, abs=1e-7)


def test_distance_is_symmetric_bit_for_bit():
    p, q = Point(0.1, 0.7), Point(-3.3, 2.9)
    assert distance(p, q) == distance(q, p)


def test_quadrant_contains():
    origin = Point(0, 0)
    assert quadrant_contains(origin, 1, Point(1, 2))
    assert quadrant_contains(origin, 1, Point(0, 5))
    assert not quadrant_contains(origin, 3, Point(1, 2))
    assert quadrant_contains(origin, 2, Point(-1, 2))
    assert quadrant_contains(origin, 4, Point(1, -2))


@pytest.mark.parametrize("f, expected", [(1, 16), (1.5, 24), (2.25, 36)])
def test_packing_threshold(f, expected):
    assert packing_threshold(f) == expected


def test_packing_threshold_rejects_thin_ratio():
    with pytest.raises(GeometryError):
        packing_threshold(0.5)
    with pytest.raises(GeometryError):
        packing_threshold(math.nan)


def test_packing_threshold_is_infinite_when_the_ratio_overflows():
    assert packing_threshold(math.inf) == math.inf
    assert packing_threshold(1e308) == math.inf


@pytest.mark.parametrize("rect", [
    Rect(-1e308, 1e308, -1, 2),
    Rect(0, math.inf, 0, 1),
    Rect(-math.inf, math.inf, -math.inf, math.inf),
])
def test_unbounded_rectangles_have_infinite_aspect_ratio(rect):
    assert not rect.is_bounded
    assert rect.aspect_ratio == math.inf


def test_point_rejects_non_finite():
    with pytest.raises(GeometryError):
        Point(math.nan, 0)
    with pytest.raises(GeometryError):
        Point(0, math.inf)


def test_rect_properties():
    rect = Rect(0, 10, 0, 4)
    assert rect.width == 10
    assert rect.height == 4
    assert rect.shortest_side == 4
    assert rect.aspect_ratio == 2.5
    assert rect.area == 40
    assert not rect.is_square
    assert rect.contains(Point(10, 4))
    assert not rect.contains(Point(10.5, 4))


@pytest.mark.parametrize("bounds", [(1, 1, 0, 2), (0, 2, 3, 1), (math.nan, 1, 0, 1)])
def test_rect_rejects_degenerate(bounds):
    with pytest.raises(GeometryError):
        Rect(*bounds)


def test_rect_allows_unbounded_sides():
    rect = Rect(0, math.inf, -math.inf, 3)
    assert rect.contains(Point(1e300, -1e300))


def test_rect_corners_and_from_corners():
    rect = Rect.from_corners(Point(3, 1), Point(1, 4))
    assert rect == Rect(1, 3, 1, 4)
    assert rect.corners() == (Point(1, 1), Point(3, 1), Point(3, 4), Point(1, 4))


def test_orientation_quadrants():
    assert Orientation.NE.quadrant is Quadrant.Q1
    assert Orientation.SW.signs == (-1, -1)
    assert Orientation.SE.arrow == "↘"


def test_check_general_position_names_both_points():
    with pytest.raises(GeneralPositionError) as excinfo:
        check_general_position([Point(1, 5), Point(2, 1), Point(1, 7)])
    assert excinfo.value.axis == "x"
    assert {excinfo.value.first, excinfo.value.second} == {Point(1, 5), Point(1, 7)}
    assert "(1.0, 5.0)" in str(excinfo.value)


def test_check_general_position_y_axis_only():
    check_general_position([Point(1, 5), Point(2, 6)], "y")
    with pytest.raises(GeneralPositionError):
        check_general_position([Point(1, 5), Point(2, 5)], "y")


def test_pair_key_orders_points():
    p, q = Point(2, 0), Point(0, 0)
    assert pair_key(p, q) == (2.0, q, p)
    assert pair_key(p, q) == pair_key(q, p)
