import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import general_position_points
from exceptions import AnalysisParameterError
from geometry.primitives import Point
from services.analysis import (
    del_square_edge,
    find_square_witness,
    gen_lower_bound_instance,
    growth_slope,
    is_candidate_witness,
    pairs_cross,
    quadrant_candidate_pairs,
    quadrant_candidate_report,
    square_candidate_survey,
    survey_growth,
    verify_lower_bound,
)
from services.datasets import uniform_points


def test_lower_bound_instance_shape():
    points = gen_lower_bound_instance(4, 1e-3, seed=0)

    assert len(points) == 4
    for p in points:
        assert math.hypot(p.x, p.y) == pytest.approx(1, abs=1e-12)
    assert sum(p.x > 0 for p in points) == 2
    assert len({p.x for p in points}) == 4
    assert len({p.y for p in points}) == 4


@pytest.mark.parametrize("n, arc", [(2, 1e-3), (7, 1e-3), (8, 0), (8, 0.5)])
def test_lower_bound_instance_rejects_bad_parameters(n, arc):
    with pytest.raises(AnalysisParameterError):
        gen_lower_bound_instance(n, arc)


def test_lower_bound_instance_is_deterministic():
    assert gen_lower_bound_instance(32, seed=5) == gen_lower_bound_instance(32, seed=5)


def test_all_cross_pairs_are_candidates():
    report = verify_lower_bound(64, fatness=1.1)

    assert report.cross_pairs == 1024
    assert report.verified == report.expected == 1024


def test_verify_lower_bound_needs_fat_family():
    with pytest.raises(AnalysisParameterError):
        verify_lower_bound(8, fatness=1.0)


def test_candidate_witness_examples():
    p, q = Point(0, 0), Point(1, 1.05)
    witness = is_candidate_witness(p, q, [p, q], 1.1)
    assert witness is not None
    assert witness.pair == (p, q)
    assert witness.rect.aspect_ratio == pytest.approx(1.05)

    assert is_candidate_witness(p, q, [p, q], 1.01) is None
    r = Point(1, 1)
    assert is_candidate_witness(Point(0, 0), r, [Point(0, 0), r, Point(0.5, 0.5)], 1.1) is None


def test_del_square_edge_examples():
    p, q, r = Point(0, 0), Point(2, 2), Point(1, 1)

    assert del_square_edge(p, q, [p, q], 0)
    assert not del_square_edge(p, q, [p, q, r], 0)
    assert del_square_edge(p, q, [p, q, r], 1)
    with pytest.raises(AnalysisParameterError):
        del_square_edge(p, p, [p], 0)


def test_square_witness_slides_past_blockers():
    # p and q are 4 apart in x; the square can slide down to dodge (2, 3)
    p, q = Point(0, 0), Point(4, 1)
    blocker = Point(2, 3)
    witness = find_square_witness(p, q, [p, q, blocker], 0)

    assert witness is not None
    assert witness.width == witness.height == 4
    assert not (witness.ax < blocker.x < witness.bx and witness.ay < blocker.y < witness.by)
    assert find_square_witness(p, q, [p, q, Point(2, 0.5)], 0) is None


def _strict_count(points, x0, y0, side):
    x0, y0, side = Fraction(x0), Fraction(y0), Fraction(side)
    return sum(1 for r in points if x0 < r.x < x0 + side and y0 < r.y < y0 + side)


def _sweep_finds_square(p, q, points, k, samples=64):
    """Dense sample of squares of side max offset with p and q on opposite sides"""
    dx, dy = abs(Fraction(p.x) - Fraction(q.x)), abs(Fraction(p.y) - Fraction(q.y))
    m = max(dx, dy)
    for long_axis in ([0] if dx > dy else [1] if dy > dx else [0, 1]):
        short = (lambda t: Fraction(t.y)) if long_axis == 0 else (lambda t: Fraction(t.x))
        long = (lambda t: Fraction(t.x)) if long_axis == 0 else (lambda t: Fraction(t.y))
        start = min(long(p), long(q))
        hi = min(short(p), short(q))
        lo = max(short(p), short(q)) - m
        for step in range(samples):
            slide = lo + (hi - lo) * Fraction(step, samples - 1)
            x0, y0 = (start, slide) if long_axis == 0 else (slide, start)
            if _strict_count(points, x0, y0, m) <= k:
                return True
    return False


@settings(max_examples=60, deadline=None)
@given(general_position_points(min_size=2, max_size=20), st.integers(0, 2), st.data())
def test_del_square_edge_agrees_with_sampled_sweep(points, k, data):
    i, j = data.draw(st.lists(st.integers(0, len(points) - 1), min_size=2, max_size=2, unique=True))
    p, q = points[i], points[j]

    exact = del_square_edge(p, q, points, k)

    if _sweep_finds_square(p, q, points, k):
        assert exact
    if exact:
        witness = find_square_witness(p, q, points, k)
        side = Fraction(witness.width)
        assert Fraction(witness.height) == side
        assert _strict_count(points, witness.ax, witness.ay, witness.width) <= k
        for corner in (p, q):
            on_x = witness.ax <= corner.x <= witness.bx
            on_y = witness.ay <= corner.y <= witness.by
            assert on_x and on_y
            assert corner.x in (witness.ax, witness.bx) or corner.y in (witness.ay, witness.by)


def test_square_survey_on_two_points():
    survey = square_candidate_survey([Point(0, 0), Point(1, 2)], trials=10, seed=1)
    assert survey.count == 1


def test_square_survey_pairs_are_order_two_delaunay_edges():
    points = uniform_points(40, seed=7)
    survey = square_candidate_survey(points, trials=100, seed=7)

    assert survey.count > 0
    for p, q in survey.pairs:
        assert del_square_edge(p, q, points, 2)


@pytest.mark.slow
def test_survey_growth_is_at_most_linear():
    rows = survey_growth([64, 128, 256], trials=200, seed=7)

    assert all(row.in_del2 == row.pairs for row in rows)
    assert growth_slope(rows) <= 2 * max(row.per_point for row in rows)


def test_quadrant_candidate_pairs_example():
    points = [Point(0, 0), Point(1, 3), Point(2, 1)]

    pairs = quadrant_candidate_pairs(points)

    assert pairs == {(Point(0, 0), Point(2, 1)), (Point(1, 3), Point(2, 1))}


def test_pairs_cross():
    assert pairs_cross((Point(0, 0), Point(2, 2)), (Point(0, 2), Point(2, 0)))
    assert not pairs_cross((Point(0, 0), Point(1, 1)), (Point(1, 1), Point(2, 0)))
    assert not pairs_cross((Point(0, 0), Point(1, 0.5)), (Point(2, 2), Point(3, 0)))


def test_quadrant_candidates_do_not_cross():
    points = uniform_points(150, seed=11)

    report = quadrant_candidate_report(points)

    assert report.crossings == 0
    assert report.pairs <= 3 * len(points) - 6
