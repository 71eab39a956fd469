"""
Two-level range tree with fractional cascading.

The primary tree is a balanced binary tree over the points in x order. Every
node u stores the array A_u of its subtree's points sorted by a secondary key
(y by default, or any linear form a*x + b*y). A rectangle query decomposes
into O(log n) canonical subarrays A_u[start:stop] that partition the points
inside the rectangle.

Cascading is realized with rank arrays: left_rank[i] counts how many of the
first i entries of A_u belong to the left child, so a position found by one
binary search at the root translates into the children's positions in O(1).
With ``cascading=False`` every canonical node does its own binary searches
instead (O(log^2 n) per query).
"""

import bisect
import logging
import math
from dataclasses import dataclass
from typing import Any, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from exceptions import MissingWeightsError
from geometry.primitives import Point, Rect, check_general_position
from structures.rmq import RmqIndex, RmqMethod

logger = logging.getLogger(__name__)

KeyForm = Tuple[float, float]
Y_KEY: KeyForm = (0.0, 1.0)


@dataclass(slots=True, eq=False)
class TreeNode:
    lo: int  # subtree covers leaves [lo, hi) in x order
    hi: int
    ids: np.ndarray  # point indices sorted by (key, x)
    keys: np.ndarray
    left_rank: Optional[List[int]] = None
    left: Optional["TreeNode"] = None
    right: Optional["TreeNode"] = None
    rmq: Optional[RmqIndex] = None
    extra: Any = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __len__(self) -> int:
        return len(self.ids)


@dataclass(frozen=True, slots=True)
class CanonicalRange:
    """Subarray node.ids[start:stop] of one canonical node"""
    node: TreeNode
    start: int
    stop: int

    def __len__(self) -> int:
        return self.stop - self.start

    def ids(self) -> List[int]:
        return self.node.ids[self.start:self.stop].tolist()


@dataclass(frozen=True, slots=True)
class WeightedEntry:
    weight: float
    point: Point
    payload: Any
    index: int


class RangeTree:
    """
    Static range tree answering report, count and min-weight queries

    Queries are rectangles in (x, key) space; with the default key y that is
    the ordinary plane.
    """

    def __init__(
        self,
        points: Sequence[Point],
        weights: Optional[Sequence[float]] = None,
        payloads: Optional[Sequence[Any]] = None,
        tie_keys: Optional[Sequence[Any]] = None,
        key_form: KeyForm = Y_KEY,
        cascading: bool = True,
        rmq_method: RmqMethod = RmqMethod.BLOCK,
        distinct_axes: str = "xy",
    ):
        """
        Build the tree.

        Args:
            points: Stored points; x-coordinates must be distinct
            weights: Optional weight per point, enables min_weight queries
            payloads: Optional object per point returned by min_weight_entry
            tie_keys: Order among equal weights (defaults to the points)
            key_form: (a, b) of the secondary key a*x + b*y
            cascading: Use rank-array cascading instead of per-node searches
            rmq_method: RMQ realization for weighted trees
            distinct_axes: Coordinates validated as pairwise distinct
        """
        self.points: List[Point] = list(points)
        self.key_form = key_form
        self.cascading = cascading
        self.rmq_method = RmqMethod(rmq_method)
        n = len(self.points)

        check_general_position(self.points, "x" + distinct_axes.replace("x", ""))

        if weights is not None and len(weights) != n:
            raise ValueError(f"got {len(weights)} weights for {n} points")
        if payloads is not None and len(payloads) != n:
            raise ValueError(f"got {len(payloads)} payloads for {n} points")
        self.weights: Optional[List[float]] = list(map(float, weights)) if weights is not None else None
        self.payloads = list(payloads) if payloads is not None else None

        xs = np.fromiter((p.x for p in self.points), dtype=np.float64, count=n)
        ys = np.fromiter((p.y for p in self.points), dtype=np.float64, count=n)
        self._key = self._secondary_keys(xs, ys)

        order_x = np.argsort(xs, kind="stable")
        self._xs: List[float] = xs[order_x].tolist()
        self._xpos = np.empty(n, dtype=np.int64)
        self._xpos[order_x] = np.arange(n)

        self._rank: Optional[np.ndarray] = None
        if self.weights is not None:
            ties = tie_keys if tie_keys is not None else self.points
            ranked = sorted(range(n), key=lambda i: (self.weights[i], ties[i]))
            self._rank = np.empty(n, dtype=np.float64)
            self._rank[ranked] = np.arange(n, dtype=np.float64)

        self.root: Optional[TreeNode] = None
        if n:
            root_ids = np.lexsort((xs, self._key))
            self.root = self._build(0, n, root_ids)
        logger.debug(
            f"{type(self).__name__} built: n={n}, weighted={self.is_weighted}, cascading={cascading}"
        )

    def _build(self, lo: int, hi: int, ids: np.ndarray) -> TreeNode:
        node = TreeNode(lo=lo, hi=hi, ids=ids, keys=self._key[ids])
        if self._rank is not None:
            node.rmq = RmqIndex(self._rank[ids], self.rmq_method)
        self._decorate(node)
        if hi - lo > 1:
            mid = (lo + hi) // 2
            mask = self._xpos[ids] < mid
            node.left_rank = [0] + np.cumsum(mask).tolist()
            node.left = self._build(lo, mid, ids[mask])
            node.right = self._build(mid, hi, ids[~mask])
        return node

    def _secondary_keys(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Sort key of every stored point inside a node array"""
        if self.key_form == Y_KEY:
            return ys.copy()
        a, b = self.key_form
        return a * xs + b * ys

    def _decorate(self, node: TreeNode) -> None:
        """Hook for per-node auxiliary data"""

    def __len__(self) -> int:
        return len(self.points)

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None

    def nodes(self) -> Iterator[TreeNode]:
        stack = [self.root] if self.root is not None else []
        while stack:
            node = stack.pop()
            yield node
            if not node.is_leaf:
                stack.append(node.right)
                stack.append(node.left)

    def secondary_key(self, p: Point) -> float:
        a, b = self.key_form
        return p.y if self.key_form == Y_KEY else a * p.x + b * p.y

    def _canonical(
        self,
        x_lo: float,
        x_hi: float,
        key_lo: float,
        key_hi: float,
    ) -> List[CanonicalRange]:
        """Canonical subarrays for x in [x_lo, x_hi] and key in [key_lo, key_hi]"""
        root = self.root
        if root is None:
            return []
        i = bisect.bisect_left(self._xs, x_lo)
        j = bisect.bisect_right(self._xs, x_hi)
        if i >= j:
            return []
        out: List[CanonicalRange] = []
        if self.cascading:
            start = int(np.searchsorted(root.keys, key_lo, side="left"))
            stop = int(np.searchsorted(root.keys, key_hi, side="right"))
            stack = [(root, start, stop)]
            while stack:
                node, start, stop = stack.pop()
                if start >= stop:
                    continue
                if i <= node.lo and node.hi <= j:
                    out.append(CanonicalRange(node, start, stop))
                    continue
                rank = node.left_rank
                left_start, left_stop = rank[start], rank[stop]
                mid = node.left.hi
                if j > mid:
                    stack.append((node.right, start - left_start, stop - left_stop))
                if i < mid:
                    stack.append((node.left, left_start, left_stop))
        else:
            stack = [root]
            while stack:
                node = stack.pop()
                if i <= node.lo and node.hi <= j:
                    start = int(np.searchsorted(node.keys, key_lo, side="left"))
                    stop = int(np.searchsorted(node.keys, key_hi, side="right"))
                    if start < stop:
                        out.append(CanonicalRange(node, start, stop))
                    continue
                mid = node.left.hi
                if j > mid:
                    stack.append(node.right)
                if i < mid:
                    stack.append(node.left)
        return out

    def canonical(self, rect: Rect) -> List[CanonicalRange]:
        """Canonical subarrays whose union is the set of stored points in rect"""
        return self._canonical(rect.ax, rect.bx, rect.ay, rect.by)

    def report_ids(self, rect: Rect) -> List[int]:
        ids: List[int] = []
        for piece in self.canonical(rect):
            ids.extend(piece.ids())
        return ids

    def report(self, rect: Rect) -> List[Point]:
        """Stored points inside rect, each exactly once"""
        points = self.points
        return [points[i] for i in self.report_ids(rect)]

    def count(self, rect: Rect) -> int:
        """Number of stored points inside rect"""
        return sum(len(piece) for piece in self.canonical(rect))

    def min_weight_entry(self, rect: Rect) -> Optional[WeightedEntry]:
        """Minimum-weight stored point inside rect, with its payload"""
        if self._rank is None:
            raise MissingWeightsError("range tree was built without weights")
        rank = self._rank
        best = -1
        for piece in self.canonical(rect):
            position = piece.node.rmq.query(piece.start, piece.stop - 1)
            candidate = int(piece.node.ids[position])
            if best < 0 or rank[candidate] < rank[best]:
                best = candidate
        if best < 0:
            return None
        payload = self.payloads[best] if self.payloads is not None else None
        return WeightedEntry(self.weights[best], self.points[best], payload, best)

    def min_weight(self, rect: Rect) -> Optional[Tuple[float, Point]]:
        """Minimum weight over the points inside rect and its witness point"""
        entry = self.min_weight_entry(rect)
        if entry is None:
            return None
        return entry.weight, entry.point

    def _node_extra_entries(self, node: TreeNode) -> int:
        return 0

    def entry_count(self) -> int:
        """Stored words: arrays, keys, cascading ranks, RMQ tables and node extras"""
        total = 0
        for node in self.nodes():
            total += 2 * len(node.ids)
            if node.left_rank is not None:
                total += len(node.left_rank)
            if node.rmq is not None:
                total += node.rmq.entry_count()
            total += self._node_extra_entries(node)
        return total

    def rmq_usage(self) -> Tuple[int, int]:
        """(stored RMQ words, RMQ values) summed over every node"""
        words = values = 0
        for node in self.nodes():
            if node.rmq is not None:
                words += node.rmq.entry_count()
                values += len(node.rmq)
        return words, values

    def depth(self) -> int:
        return 0 if not self.points else math.ceil(math.log2(len(self.points))) + 1
