"""
Exact closest pair of a planar point set.

Both algorithms minimise the same key (|pq|, lo, hi), so ties resolve to the
lexicographically smallest pair and the two always agree exactly.
"""

import heapq
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from geometry.primitives import Point, pair_key

# Relative slack used when shortlisting pairs by squared distance before the
# exact comparison.
_SHORTLIST_SLACK = 1e-9


@dataclass(frozen=True, slots=True)
class PairResult:
    """Closest pair (smaller point first) and its distance; +inf with no pair"""
    pair: Optional[Tuple[Point, Point]] = None
    dist: float = math.inf

    @classmethod
    def of(cls, p: Point, q: Point) -> "PairResult":
        dist, lo, hi = pair_key(p, q)
        return cls(pair=(lo, hi), dist=dist)

    @property
    def key(self):
        if self.pair is None:
            return (math.inf,)
        return (self.dist, self.pair[0], self.pair[1])

    def better_than(self, other: "PairResult") -> bool:
        if self.pair is None:
            return False
        if other.pair is None:
            return True
        return self.key < other.key


NO_PAIR = PairResult()


def closest_pair_brute(points: Sequence[Point]) -> PairResult:
    """
    All-pairs closest pair.

    Squared distances are computed row by row with numpy to shortlist the
    pairs that can reach the minimum; the shortlist is then ranked with the
    exact key.
    """
    m = len(points)
    if m < 2:
        return NO_PAIR

    xs = np.fromiter((p.x for p in points), dtype=np.float64, count=m)
    ys = np.fromiter((p.y for p in points), dtype=np.float64, count=m)

    best_sq = math.inf
    rows: List[Tuple[int, np.ndarray]] = []
    for i in range(m - 1):
        d2 = (xs[i + 1:] - xs[i]) ** 2 + (ys[i + 1:] - ys[i]) ** 2
        row_min = float(d2.min())
        if row_min <= best_sq * (1 + _SHORTLIST_SLACK):
            best_sq = min(best_sq, row_min)
            rows.append((i, d2))

    cutoff = best_sq * (1 + _SHORTLIST_SLACK)
    best = NO_PAIR
    for i, d2 in rows:
        for offset in np.flatnonzero(d2 <= cutoff):
            candidate = PairResult.of(points[i], points[i + 1 + int(offset)])
            if candidate.better_than(best):
                best = candidate
    return best


def _scan(points: Sequence[Point]) -> PairResult:
    best = NO_PAIR
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            candidate = PairResult.of(points[i], points[j])
            if candidate.better_than(best):
                best = candidate
    return best


def closest_pair_fast(points: Sequence[Point], cutoff: Optional[int] = None) -> PairResult:
    """
    Divide-and-conquer closest pair in O(m log m).

    Args:
        points: Input points, any order
        cutoff: Subproblem size handled by direct scanning

    Returns:
        PairResult with the lexicographically smallest closest pair
    """
    if len(points) < 2:
        return NO_PAIR
    cutoff = max(2, cutoff or Config.CLOSEST_PAIR_CUTOFF)
    by_x = sorted(points)
    result, _ = _recurse(by_x, cutoff)
    return result


def _recurse(by_x: List[Point], cutoff: int) -> Tuple[PairResult, List[Point]]:
    """Returns the closest pair of by_x and the same points sorted by (y, x)"""
    m = len(by_x)
    if m <= cutoff:
        return _scan(by_x), sorted(by_x, key=_y_order)

    mid = m // 2
    mid_x = by_x[mid].x
    left, left_y = _recurse(by_x[:mid], cutoff)
    right, right_y = _recurse(by_x[mid:], cutoff)
    best = left if not right.better_than(left) else right
    merged = list(heapq.merge(left_y, right_y, key=_y_order))

    # Non-strict bounds keep equal-distance pairs alive for the tie rule
    width = best.dist
    strip = [p for p in merged if abs(p.x - mid_x) <= width]
    for i, p in enumerate(strip):
        for j in range(i + 1, len(strip)):
            q = strip[j]
            if q.y - p.y > best.dist:
                break
            candidate = PairResult.of(p, q)
            if candidate.better_than(best):
                best = candidate
    return best, merged


def _y_order(p: Point) -> Tuple[float, float]:
    return p.y, p.x
