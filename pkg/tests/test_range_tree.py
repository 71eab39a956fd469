import math

import pytest
from hypothesis import given, settings, strategies as st

from conftest import general_position_points, rectangles, scan
from exceptions import GeneralPositionError, MissingWeightsError
from geometry.primitives import Point, Rect
from structures.range_tree import RangeTree
from structures.rmq import RmqMethod


@pytest.fixture
def weighted_tree():
    points = [Point(1, 1), Point(2, 3), Point(4, 0.5)]
    return RangeTree(points, weights=[5, 2, 7], payloads=["a", "b", "c"])


def test_min_weight_example(weighted_tree):
    assert weighted_tree.min_weight(Rect(0, 3, 0, 4)) == (2, Point(2, 3))
    assert weighted_tree.min_weight(Rect(3, 5, 0, 1)) == (7, Point(4, 0.5))
    assert weighted_tree.min_weight(Rect(10, 11, 10, 11)) is None


def test_min_weight_entry_carries_payload(weighted_tree):
    entry = weighted_tree.min_weight_entry(Rect(0, 5, 0, 4))
    assert entry.weight == 2
    assert entry.payload == "b"
    assert entry.point == Point(2, 3)


def test_min_weight_requires_weights():
    tree = RangeTree([Point(1, 1)])
    with pytest.raises(MissingWeightsError):
        tree.min_weight(Rect(0, 2, 0, 2))


def test_duplicate_x_is_rejected():
    with pytest.raises(GeneralPositionError) as excinfo:
        RangeTree([Point(1, 1), Point(1, 2)])
    assert excinfo.value.axis == "x"


def test_weight_count_must_match():
    with pytest.raises(ValueError):
        RangeTree([Point(1, 1), Point(2, 2)], weights=[1])


def test_empty_tree():
    tree = RangeTree([])
    assert tree.count(Rect(-1, 1, -1, 1)) == 0
    assert tree.report(Rect(-1, 1, -1, 1)) == []
    assert tree.entry_count() == 0


def test_structure_is_balanced_and_sorted(uniform_1024):
    tree = RangeTree(uniform_1024)
    for node in tree.nodes():
        keys = node.keys.tolist()
        assert keys == sorted(keys)
        assert len(node) == node.hi - node.lo
        if not node.is_leaf:
            assert abs(len(node.left) - len(node.right)) <= 1
            assert node.left_rank[-1] == len(node.left)
    assert max(node_depth for node_depth in _depths(tree.root)) <= tree.depth()


def _depths(node, depth=1):
    if node.is_leaf:
        yield depth
    else:
        yield from _depths(node.left, depth + 1)
        yield from _depths(node.right, depth + 1)


def test_ties_on_weight_use_tie_keys():
    points = [Point(1, 1), Point(2, 2), Point(3, 3)]
    tree = RangeTree(points, weights=[1, 1, 1], tie_keys=[3, 1, 2])
    assert tree.min_weight(Rect(0, 4, 0, 4)) == (1, Point(2, 2))

    default = RangeTree(points, weights=[1, 1, 1])
    assert default.min_weight(Rect(0, 4, 0, 4)) == (1, Point(1, 1))


def test_linear_key_form_queries_diagonal_bands():
    points = [Point(0, 0), Point(1, 3), Point(2, 1), Point(3, 5)]
    tree = RangeTree(points, key_form=(-1.0, 1.0))
    # y - x in [1, 2]
    band = tree.report(Rect(-math.inf, math.inf, 1, 2))
    assert sorted(band) == [Point(1, 3), Point(3, 5)]


@settings(max_examples=150, deadline=None)
@given(general_position_points(max_size=50), rectangles(), st.booleans())
def test_canonical_ranges_partition_the_query(points, rect, cascading):
    tree = RangeTree(points, cascading=cascading)

    pieces = tree.canonical(rect)
    ids = [i for piece in pieces for i in piece.ids()]

    assert len(ids) == len(set(ids))
    assert sorted(points[i] for i in ids) == sorted(scan(points, rect))
    assert tree.count(rect) == len(scan(points, rect))
    assert len(pieces) <= 2 * max(1, tree.depth())


@settings(max_examples=150, deadline=None)
@given(
    general_position_points(min_size=1, max_size=50),
    rectangles(),
    st.sampled_from([RmqMethod.BLOCK, RmqMethod.SPARSE]),
    st.data(),
)
def test_min_weight_matches_scan(points, rect, rmq_method, data):
    weights = data.draw(st.lists(st.integers(0, 9).map(float), min_size=len(points), max_size=len(points)))
    tree = RangeTree(points, weights=weights, rmq_method=rmq_method)

    inside = [(w, p) for w, p in zip(weights, points) if rect.contains(p)]
    expected = min(inside) if inside else None

    assert tree.min_weight(rect) == expected


def test_fallback_search_gives_identical_answers(uniform_1024, queries_1024):
    cascaded = RangeTree(uniform_1024, cascading=True)
    fallback = RangeTree(uniform_1024, cascading=False)
    for rect in queries_1024:
        assert sorted(cascaded.report_ids(rect)) == sorted(fallback.report_ids(rect))
        assert cascaded.count(rect) == len(scan(uniform_1024, rect))
