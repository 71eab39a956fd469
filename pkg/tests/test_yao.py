import io

import pytest
from hypothesis import given, settings

from conftest import general_position_points
from exceptions import GeneralPositionError
from geometry.primitives import Point, Quadrant, distance
from services.datasets import clustered_points, uniform_points
from structures.kdtree import KdTree
from structures.yao import YaoMethod, yao_build


def test_yao_example():
    points = [Point(0, 0), Point(1, 2), Point(2, 0.9)]

    graph = yao_build(points)

    assert graph.has_edge(Quadrant.Q1, Point(0, 0), Point(2, 0.9))
    assert not graph.has_edge(Quadrant.Q1, Point(0, 0), Point(1, 2))
    assert graph.target(Quadrant.Q3, 0) is None


def test_points_sharing_a_coordinate_are_rejected():
    with pytest.raises(GeneralPositionError):
        yao_build([Point(0, 0), Point(0, 1)])


def test_weighted_sets_follow_edges():
    points = [Point(0, 0), Point(1, 2), Point(2, 0.9)]
    graph = yao_build(points)

    sets = graph.weighted_sets()

    assert [m.point for m in sets[Quadrant.Q1]] == [Point(0, 0)]
    first = sets[Quadrant.Q1][0]
    assert first.target == Point(2, 0.9)
    assert first.weight == distance(Point(0, 0), Point(2, 0.9))
    assert sum(len(members) for members in sets.values()) == graph.edge_count()


def test_dump_writes_one_line_per_edge():
    graph = yao_build([Point(0, 0), Point(1, 2)])
    stream = io.StringIO()

    lines = graph.dump(stream)

    assert stream.getvalue().splitlines() == lines
    assert lines[0] == f"1 0.0 0.0 1.0 2.0 {distance(Point(0, 0), Point(1, 2))!r}"
    assert len(lines) == 2


def test_kdtree_finds_nothing_in_empty_quadrant():
    tree = KdTree([Point(0, 0), Point(1, 1)], leaf_size=1)
    assert tree.nearest_in_quadrant(0, Quadrant.Q1) == 1
    assert tree.nearest_in_quadrant(0, Quadrant.Q2) is None
    with pytest.raises(ValueError):
        KdTree([], leaf_size=0)


def test_kdtree_breaks_distance_ties_lexicographically():
    points = [Point(0, 0), Point(3, 4), Point(5, 0.5), Point(4, 3)]
    tree = KdTree(points, leaf_size=1)
    assert tree.nearest_in_quadrant(0, Quadrant.Q1) == 1


@settings(max_examples=150, deadline=None)
@given(general_position_points(max_size=60))
def test_kdtree_and_brute_build_the_same_graph(points):
    fast = yao_build(points, YaoMethod.KDTREE, leaf_size=2)
    brute = yao_build(points, YaoMethod.BRUTE)
    for quadrant in Quadrant:
        assert fast.edges(quadrant) == brute.edges(quadrant)


@settings(max_examples=100, deadline=None)
@given(general_position_points(max_size=60))
def test_edges_point_into_their_quadrant_and_are_nearest(points):
    graph = yao_build(points)
    for edge in graph.all_edges():
        sx, sy = edge.quadrant.signs
        assert sx * (edge.target.x - edge.source.x) >= 0
        assert sy * (edge.target.y - edge.source.y) >= 0
        others = [
            q for q in points
            if q != edge.source
            and sx * (q.x - edge.source.x) >= 0 and sy * (q.y - edge.source.y) >= 0
        ]
        assert edge.length == min(distance(edge.source, q) for q in others)


def test_kdtree_matches_brute_on_uniform_points(uniform_1024):
    fast = yao_build(uniform_1024, YaoMethod.KDTREE)
    brute = yao_build(uniform_1024, YaoMethod.BRUTE)
    for quadrant in Quadrant:
        assert [fast.target(quadrant, i) for i in range(len(uniform_1024))] == \
            [brute.target(quadrant, i) for i in range(len(uniform_1024))]


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(50))
def test_kdtree_matches_brute_up_to_2048_points(seed):
    n = [32, 128, 512, 1024, 2048][seed % 5]
    generator = uniform_points if seed % 2 else clustered_points
    points = generator(n, seed=seed)

    fast = yao_build(points, YaoMethod.KDTREE)
    brute = yao_build(points, YaoMethod.BRUTE)
    for quadrant in Quadrant:
        assert fast.edges(quadrant) == brute.edges(quadrant)
        assert len({edge.source for edge in fast.edges(quadrant)}) == len(fast.edges(quadrant))
