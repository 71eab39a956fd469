"""
Bucketed 2-d tree with quadrant-constrained nearest-neighbour search.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from geometry.primitives import Point, Quadrant, distance


@dataclass(slots=True, eq=False)
class _Node:
    start: int  # leaf bucket is order[start:stop]
    stop: int
    min_x: float
    max_x: float
    min_y: float
    max_y: float
    left: Optional["_Node"] = None
    right: Optional["_Node"] = None


class KdTree:
    """
    Static kd-tree over a point sequence

    Splits alternate between x and y at the median (found with
    ``np.argpartition``); every node keeps its bounding box.
    """

    def __init__(self, points: Sequence[Point], leaf_size: int = Config.KD_LEAF_SIZE):
        if leaf_size < 1:
            raise ValueError(f"leaf_size must be >= 1, got {leaf_size}")
        self.points: List[Point] = list(points)
        self.leaf_size = leaf_size
        n = len(self.points)
        self._coords = np.array([(p.x, p.y) for p in self.points], dtype=np.float64).reshape(n, 2)
        self._order = np.arange(n)
        self.root = self._build(0, n, 0) if n else None
        self.order: List[int] = self._order.tolist()

    def _build(self, start: int, stop: int, axis: int) -> _Node:
        ids = self._order[start:stop]
        block = self._coords[ids]
        node = _Node(
            start, stop,
            float(block[:, 0].min()), float(block[:, 0].max()),
            float(block[:, 1].min()), float(block[:, 1].max()),
        )
        if stop - start <= self.leaf_size:
            return node
        mid = (stop - start) // 2
        self._order[start:stop] = ids[np.argpartition(block[:, axis], mid)]
        node.left = self._build(start, start + mid, 1 - axis)
        node.right = self._build(start + mid, stop, 1 - axis)
        return node

    @staticmethod
    def _gap(node: _Node, p: Point, sx: int, sy: int) -> Optional[float]:
        """Lower bound on |pq| for q in the node's box and the quadrant, None when disjoint"""
        if sx > 0:
            if node.max_x < p.x:
                return None
            dx = max(0.0, node.min_x - p.x)
        else:
            if node.min_x > p.x:
                return None
            dx = max(0.0, p.x - node.max_x)
        if sy > 0:
            if node.max_y < p.y:
                return None
            dy = max(0.0, node.min_y - p.y)
        else:
            if node.min_y > p.y:
                return None
            dy = max(0.0, p.y - node.max_y)
        return math.hypot(dx, dy)

    def nearest_in_quadrant(self, index: int, quadrant: Quadrant) -> Optional[int]:
        """
        Nearest other point in the closed quadrant of points[index].

        Ties on distance go to the lexicographically smaller point.

        Returns:
            Index of the nearest point, or None if the quadrant is empty
        """
        if self.root is None:
            return None
        points = self.points
        p = points[index]
        sx, sy = Quadrant(quadrant).signs
        best: Tuple[float, Optional[Point]] = (math.inf, None)
        best_index: Optional[int] = None

        gap = self._gap(self.root, p, sx, sy)
        stack: List[Tuple[float, _Node]] = [] if gap is None else [(gap, self.root)]
        while stack:
            gap, node = stack.pop()
            if gap > best[0]:
                continue
            if node.left is None:
                for j in self.order[node.start:node.stop]:
                    if j == index:
                        continue
                    q = points[j]
                    if sx * (q.x - p.x) < 0 or sy * (q.y - p.y) < 0:
                        continue
                    key = (distance(p, q), q)
                    if best[1] is None or key < best:
                        best, best_index = key, j
                continue
            children = []
            for child in (node.left, node.right):
                child_gap = self._gap(child, p, sx, sy)
                if child_gap is not None and child_gap <= best[0]:
                    children.append((child_gap, child))
            # nearer child on top of the stack
            children.sort(key=lambda item: item[0], reverse=True)
            stack.extend(children)
        return best_index
