"""
Quadrant Yao graph.

For every point p and quadrant k, Yao_k contains the edge p -> p_k to the
nearest other point in the closed quadrant Q_k(p), if there is one. Points
with an outgoing Yao_k edge, weighted by the edge length, form the sets S_k
fed into the min-weight range trees.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, TextIO

import numpy as np

from config import Config
from geometry.primitives import Point, Quadrant, check_general_position, distance
from structures.kdtree import KdTree

logger = logging.getLogger(__name__)

# Relative slack on squared distances before exact ranking
_SHORTLIST_SLACK = 1e-9


class YaoMethod(str, Enum):
    KDTREE = "kdtree"
    BRUTE = "brute"


@dataclass(frozen=True, slots=True)
class YaoEdge:
    quadrant: Quadrant
    source: Point
    target: Point
    length: float

    def to_line(self) -> str:
        return (f"{int(self.quadrant)} {self.source.x!r} {self.source.y!r} "
                f"{self.target.x!r} {self.target.y!r} {self.length!r}")


@dataclass(frozen=True, slots=True)
class WeightedPoint:
    """Member of S_k: the point, its Yao_k edge length and the edge target"""
    point: Point
    weight: float
    target: Point


class YaoGraph:
    """Four directed subgraphs Yao_1..Yao_4 over one point set"""

    def __init__(self, points: Sequence[Point], targets: Dict[Quadrant, List[Optional[int]]]):
        self.points: List[Point] = list(points)
        self._targets = targets

    def __len__(self) -> int:
        return len(self.points)

    def target(self, quadrant: Quadrant, index: int) -> Optional[int]:
        """Index of the Yao_k neighbour of points[index], or None"""
        return self._targets[Quadrant(quadrant)][index]

    def edges(self, quadrant: Quadrant) -> List[YaoEdge]:
        quadrant = Quadrant(quadrant)
        points = self.points
        return [
            YaoEdge(quadrant, points[i], points[j], distance(points[i], points[j]))
            for i, j in enumerate(self._targets[quadrant])
            if j is not None
        ]

    def all_edges(self) -> Iterator[YaoEdge]:
        for quadrant in Quadrant:
            yield from self.edges(quadrant)

    def has_edge(self, quadrant: Quadrant, source: Point, target: Point) -> bool:
        return any(e.source == source and e.target == target for e in self.edges(quadrant))

    def edge_count(self) -> int:
        return sum(1 for targets in self._targets.values() for j in targets if j is not None)

    def weighted_sets(self) -> Dict[Quadrant, List[WeightedPoint]]:
        """S_1..S_4: points with an outgoing edge, weighted by its length"""
        return {
            quadrant: [WeightedPoint(e.source, e.length, e.target) for e in self.edges(quadrant)]
            for quadrant in Quadrant
        }

    def dump(self, stream: Optional[TextIO] = None) -> List[str]:
        """Edge list, one "k p_x p_y q_x q_y length" line per edge, also written to stream if given"""
        lines = [edge.to_line() for edge in self.all_edges()]
        if stream is not None:
            for line in lines:
                stream.write(line + "\n")
        return lines


def _nearest_brute(xs: np.ndarray, ys: np.ndarray, points: Sequence[Point], index: int,
                   quadrant: Quadrant) -> Optional[int]:
    p = points[index]
    sx, sy = quadrant.signs
    mask = (sx * (xs - p.x) >= 0) & (sy * (ys - p.y) >= 0)
    mask[index] = False
    candidates = np.flatnonzero(mask)
    if not len(candidates):
        return None
    d2 = (xs[candidates] - p.x) ** 2 + (ys[candidates] - p.y) ** 2
    shortlist = candidates[d2 <= d2.min() * (1 + _SHORTLIST_SLACK)]
    return min(shortlist.tolist(), key=lambda j: (distance(p, points[j]), points[j]))


def yao_build(
    points: Sequence[Point],
    method: YaoMethod = YaoMethod.KDTREE,
    leaf_size: int = Config.KD_LEAF_SIZE,
) -> YaoGraph:
    """
    Build the quadrant Yao graph.

    Args:
        points: Points in general position
        method: kd-tree search, or the all-pairs scan used as the oracle
        leaf_size: kd-tree bucket size

    Returns:
        YaoGraph with at most one outgoing edge per point and quadrant

    Raises:
        GeneralPositionError if two points share a coordinate
    """
    points = list(points)
    check_general_position(points, "xy")
    method = YaoMethod(method)
    n = len(points)
    targets: Dict[Quadrant, List[Optional[int]]] = {}

    if method is YaoMethod.KDTREE:
        tree = KdTree(points, leaf_size=leaf_size)
        for quadrant in Quadrant:
            targets[quadrant] = [tree.nearest_in_quadrant(i, quadrant) for i in range(n)]
    else:
        xs = np.fromiter((p.x for p in points), dtype=np.float64, count=n)
        ys = np.fromiter((p.y for p in points), dtype=np.float64, count=n)
        for quadrant in Quadrant:
            targets[quadrant] = [_nearest_brute(xs, ys, points, i, quadrant) for i in range(n)]

    graph = YaoGraph(points, targets)
    logger.debug(f"Yao graph built with {method.value}: n={n}, edges={graph.edge_count()}")
    return graph


def yao_weighted_sets(graph: YaoGraph) -> Dict[Quadrant, List[WeightedPoint]]:
    return graph.weighted_sets()
