"""
Range closest-pair index.

The index bundles

1. a report/count range tree over S,
2. the anchored-square structure for the four corner orientations,
3. the quadrant Yao graph of S, and
4. one min-weight range tree per quadrant over S_k (weight = Yao_k edge
   length, payload = edge target),

and answers "closest pair inside R" with the following steps:

* if |R ∩ S| <= 4 * ceil(4f), report the points and run the closest-pair
  algorithm on them;
* otherwise take the smallest of the four anchored squares at R's corners
  (side l'), and set delta = l/2 when l' > l/2, delta = l' otherwise;
* for every k, the minimum weight of S_k inside B_k is a candidate when it is
  strictly below delta;
* for every corner square C_k, the (at most c + 1) points inside are compared
  directly;
* the smallest candidate wins.
"""

import logging
import math
import time
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from exceptions import CornerOverflowError
from geometry.closest_pair import NO_PAIR, PairResult, closest_pair_brute, closest_pair_fast
from geometry.primitives import Point, Quadrant, Rect, check_general_position, packing_threshold
from geometry.regions import RegionSet, compute_regions
from structures.anchored_square import AnchoredSquareIndex
from structures.range_tree import RangeTree
from structures.rmq import RmqMethod
from structures.yao import YaoGraph, YaoMethod, yao_build

logger = logging.getLogger(__name__)

MIN_ANCHOR_COUNT = 5


class QueryPath(str, Enum):
    SMALL = "S1"  # few points: direct closest pair
    YAO = "S3"  # min-weight Yao edge inside B_k
    CORNER = "S4"  # brute force inside a corner square


@dataclass(frozen=True, slots=True)
class QueryOutcome:
    pair: Optional[Tuple[Point, Point]]
    dist: float
    path: QueryPath
    count: Optional[int] = None
    delta: Optional[float] = None
    anchored_side: Optional[float] = None

    @property
    def found(self) -> bool:
        return self.pair is not None

    def as_pair_result(self) -> PairResult:
        return PairResult(pair=self.pair, dist=self.dist)


@dataclass(frozen=True, slots=True)
class DeltaDiagnostics:
    """Internals of the anchored-square step; delta is None on the small-count path"""
    count: int
    threshold: float  # inf when the aspect ratio overflows
    anchored_side: Optional[float] = None
    delta: Optional[float] = None


class RcpIndex:
    """
    Static index answering range closest-pair queries

    Example:
        index = RcpIndex(points)
        outcome = index.query(Rect(0, 3, 0, 2))
        outcome.pair, outcome.dist
    """

    def __init__(
        self,
        points: Sequence[Point],
        c: int = Config.ANCHOR_COUNT,
        cascading: bool = Config.CASCADING,
        rmq_method: RmqMethod = RmqMethod(Config.RMQ_METHOD),
        yao_method: YaoMethod = YaoMethod(Config.YAO_METHOD),
        leaf_size: int = Config.KD_LEAF_SIZE,
    ):
        if c < MIN_ANCHOR_COUNT:
            raise ValueError(f"anchor count c must be >= {MIN_ANCHOR_COUNT}, got {c}")
        self.points: List[Point] = list(points)
        self.c = c
        self.cascading = cascading
        self.rmq_method = RmqMethod(rmq_method)
        self.yao_method = YaoMethod(yao_method)
        n = len(self.points)

        check_general_position(self.points, "xy")
        started = time.perf_counter()

        self.report_tree = RangeTree(self.points, cascading=cascading)
        self.anchored = AnchoredSquareIndex(self.points, c=c, cascading=cascading)
        self.yao: YaoGraph = yao_build(self.points, method=self.yao_method, leaf_size=leaf_size)

        self.weighted_trees: Dict[Quadrant, RangeTree] = {}
        for quadrant, members in self.yao.weighted_sets().items():
            self.weighted_trees[quadrant] = RangeTree(
                [m.point for m in members],
                weights=[m.weight for m in members],
                payloads=[m.target for m in members],
                tie_keys=[tuple(sorted((m.point, m.target))) for m in members],
                cascading=cascading,
                rmq_method=self.rmq_method,
            )

        self.build_seconds = time.perf_counter() - started
        logger.info(
            f"Built range closest-pair index: n={n}, c={c}, cascading={cascading}, "
            f"rmq={self.rmq_method.value}, yao={self.yao_method.value}, "
            f"entries={self.entry_count()}, {self.build_seconds:.3f}s"
        )

    @property
    def corner_bound(self) -> int:
        """Most points a corner square can hold: c, plus one when two points tie at the c-th offset"""
        return self.c + 1

    def __len__(self) -> int:
        return len(self.points)

    def query_delta(self, rect: Rect) -> DeltaDiagnostics:
        """
        Point count, anchored side l' and delta for rect.

        The anchored-square step only runs when the count exceeds the packing
        threshold; otherwise the side and delta are None. Unbounded rectangles
        and those whose aspect ratio overflows always take the
        small-count path.
        """
        count = self.report_tree.count(rect)
        threshold = packing_threshold(rect.aspect_ratio)
        if count <= threshold:
            return DeltaDiagnostics(count=count, threshold=threshold)

        sides = self.anchored.corner_sides(rect)
        anchored_side = min(result.side for result in sides.values())
        half = rect.shortest_side / 2
        delta = half if anchored_side > half else anchored_side
        return DeltaDiagnostics(count=count, threshold=threshold, anchored_side=anchored_side, delta=delta)

    def query(self, rect: Rect) -> QueryOutcome:
        """
        Closest pair of the stored points inside rect.

        Args:
            rect: Closed query rectangle

        Returns:
            QueryOutcome with the lexicographically smallest closest pair, or
            no pair when rect holds fewer than two points

        Raises:
            CornerOverflowError if a corner square holds more than corner_bound points
        """
        diagnostics = self.query_delta(rect)
        if diagnostics.delta is None:
            result = closest_pair_fast(self.report_tree.report(rect))
            return QueryOutcome(result.pair, result.dist, QueryPath.SMALL, count=diagnostics.count)

        regions = compute_regions(rect, diagnostics.delta)
        best, path = NO_PAIR, QueryPath.YAO

        for quadrant in Quadrant:
            candidate = self._yao_candidate(quadrant, regions)
            if candidate.better_than(best):
                best, path = candidate, QueryPath.YAO

        for k in range(1, 5):
            inside = self.report_tree.report(regions.corner(k))
            if len(inside) > self.corner_bound:
                logger.error(f"Corner square C{k} of {rect} holds {len(inside)} points")
                raise CornerOverflowError(k, len(inside), self.corner_bound)
            candidate = closest_pair_brute(inside)
            if candidate.better_than(best):
                best, path = candidate, QueryPath.CORNER

        logger.debug(
            f"Query {rect}: count={diagnostics.count}, l'={diagnostics.anchored_side}, "
            f"delta={diagnostics.delta}, path={path.value}"
        )
        return QueryOutcome(
            best.pair, best.dist, path,
            count=diagnostics.count, delta=diagnostics.delta, anchored_side=diagnostics.anchored_side,
        )

    def _yao_candidate(self, quadrant: Quadrant, regions: RegionSet) -> PairResult:
        """Lightest S_k edge starting in B_k, kept only when strictly shorter than delta"""
        entry = self.weighted_trees[quadrant].min_weight_entry(regions.shrunken(int(quadrant)))
        if entry is None or not entry.weight < regions.delta:
            return NO_PAIR
        if not regions.rect.contains(entry.payload):
            logger.debug(f"Yao edge {entry.point} -> {entry.payload} leaves {regions.rect}")
            return NO_PAIR
        return PairResult.of(entry.point, entry.payload)

    def entry_count(self) -> int:
        """Words stored across every sub-structure"""
        return (
            self.report_tree.entry_count()
            + self.anchored.entry_count()
            + sum(tree.entry_count() for tree in self.weighted_trees.values())
        )

    def rmq_words_per_value(self) -> float:
        """Average RMQ words per stored weight across the weighted trees"""
        usage = [tree.rmq_usage() for tree in self.weighted_trees.values()]
        values = sum(v for _, v in usage)
        return sum(w for w, _ in usage) / values if values else 0.0

    def entry_bound_constant(self) -> float:
        """Measured C in entries = C * n * log2(n + 2)"""
        n = len(self.points)
        if n == 0:
            return 0.0
        return self.entry_count() / (n * math.log2(n + 2))


def brute_force_query(points: Sequence[Point], rect: Rect) -> PairResult:
    """Closest pair inside rect by filtering every point and comparing all pairs"""
    if not points:
        return NO_PAIR
    coords = np.array([(p.x, p.y) for p in points], dtype=np.float64)
    mask = (
        (coords[:, 0] >= rect.ax) & (coords[:, 0] <= rect.bx)
        & (coords[:, 1] >= rect.ay) & (coords[:, 1] <= rect.by)
    )
    return closest_pair_brute([points[i] for i in np.flatnonzero(mask)])
