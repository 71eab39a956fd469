"""
Smallest anchored squares.

For a query point q and an orientation, ``AnchoredSquareIndex.query`` returns
the side of the smallest axis-parallel square having q as the matching
corner that contains at least c points. The closed quadrant of q is split
into two cones:

* VD_q: p_x >= q_x and p_y - p_x >= q_y - q_x (vertical ray and diagonal
  included). Inside it the L-infinity offset from q is p_y - q_y, so the c
  lowest points are the only candidates.
* DH_q: p_y >= q_y and p_y - p_x < q_y - q_x (horizontal ray included, the
  diagonal excluded). The offset is p_x - q_x, so the c leftmost points are
  the only candidates.

Both cones are answered by the same ``ConeTree``, a range tree keyed by
y - x whose arrays carry the c smallest weights of every suffix; DH_q uses
the tree built over the x/y-swapped points. The diagonal y - x is compared
exactly: the tree stores ranks of the exact differences, so a rounded
subtraction never moves a point across the cone boundary. The other three
orientations reflect the coordinates and reuse the upper-right case.
"""

import bisect
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from config import Config
from geometry.primitives import Orientation, Point, Rect
from structures.range_tree import RangeTree, TreeNode

logger = logging.getLogger(__name__)


class ConeTree(RangeTree):
    """
    Range tree over (x, y - x) with suffix c-minima of y

    ``lowest(q)`` returns the ids of the c points with the smallest y among
    the points p with p_x >= q_x and p_y - p_x >= q_y - q_x (or > with
    ``strict_diagonal``).
    """

    def __init__(
        self,
        points: Sequence[Point],
        c: int,
        cascading: bool = True,
        strict_diagonal: bool = False,
    ):
        self.c = c
        self.strict_diagonal = strict_diagonal
        self._weight = [p.y for p in points]
        self._diagonals: List[Fraction] = []
        super().__init__(points, cascading=cascading, distinct_axes="x")

    def _secondary_keys(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        exact = [Fraction(y) - Fraction(x) for x, y in zip(xs.tolist(), ys.tolist())]
        self._diagonals = sorted(exact)
        ranks = [bisect.bisect_left(self._diagonals, d) for d in exact]
        return np.asarray(ranks, dtype=np.float64)

    def secondary_key(self, p: Point) -> float:
        """Lowest rank inside the cone at p; equal diagonals are inside unless strict"""
        diagonal = Fraction(p.y) - Fraction(p.x)
        if self.strict_diagonal:
            return float(bisect.bisect_right(self._diagonals, diagonal))
        return float(bisect.bisect_left(self._diagonals, diagonal))

    def _decorate(self, node: TreeNode) -> None:
        ids = node.ids.tolist()
        weight = self._weight
        c = self.c
        suffix: List[Tuple[int, ...]] = [()] * (len(ids) + 1)
        current: List[Tuple[float, int]] = []
        kept: Tuple[int, ...] = ()
        for pos in range(len(ids) - 1, -1, -1):
            i = ids[pos]
            w = weight[i]
            if len(current) < c or w < current[-1][0]:
                bisect.insort(current, (w, i))
                if len(current) > c:
                    current.pop()
                kept = tuple(j for _, j in current)
            suffix[pos] = kept
        node.extra = suffix

    def suffix_minima(self, node: TreeNode, position: int) -> Tuple[int, ...]:
        return node.extra[position]

    def _node_extra_entries(self, node: TreeNode) -> int:
        return sum(len(entry) for entry in node.extra)

    def lowest(self, q: Point) -> List[int]:
        """Ids of the c lowest points of the cone at q, by increasing weight"""
        pieces = self._canonical(q.x, math.inf, self.secondary_key(q), math.inf)
        candidates = set()
        for piece in pieces:
            candidates.update(piece.node.extra[piece.start])
        return sorted(candidates, key=self._weight.__getitem__)[: self.c]


@dataclass(frozen=True, slots=True)
class AnchoredSquareResult:
    """Side of the smallest anchored square with >= c points, +inf if none"""
    side: float = math.inf
    support: Tuple[Point, ...] = field(default_factory=tuple)

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.side)


class _UpperRightSquares:
    """Two cone trees answering the upper-right case over already reflected points"""

    def __init__(self, points: Sequence[Point], c: int, cascading: bool):
        self.c = c
        self.vertical = ConeTree(points, c, cascading=cascading)
        swapped = [Point(p.y, p.x) for p in points]
        self.horizontal = ConeTree(swapped, c, cascading=cascading, strict_diagonal=True)

    def candidates(self, q: Point) -> List[int]:
        return self.vertical.lowest(q) + self.horizontal.lowest(Point(q.y, q.x))

    def entry_count(self) -> int:
        return self.vertical.entry_count() + self.horizontal.entry_count()


class AnchoredSquareIndex:
    """
    Anchored-square structure for all four corner orientations

    Orientation NE places the bottom-left corner of the square at q, NW the
    bottom-right one, SW the top-right one and SE the top-left one.
    """

    def __init__(self, points: Sequence[Point], c: int = Config.ANCHOR_COUNT, cascading: bool = True):
        if c < 1:
            raise ValueError(f"anchor count c must be >= 1, got {c}")
        self.points: List[Point] = list(points)
        self.c = c
        self._structures: Dict[Orientation, _UpperRightSquares] = {}
        for orientation in Orientation:
            sx, sy = orientation.signs
            reflected = [p.reflect(sx, sy) for p in self.points]
            self._structures[orientation] = _UpperRightSquares(reflected, c, cascading)
        logger.debug(f"Anchored-square index built: n={len(self.points)}, c={c}")

    def query(self, q: Point, orientation: Orientation = Orientation.NE) -> AnchoredSquareResult:
        """
        Smallest square anchored at q growing towards ``orientation``.

        Args:
            q: Anchor corner
            orientation: Direction the square grows in

        Returns:
            AnchoredSquareResult with the c-th smallest L-infinity offset
            among the merged cone candidates
        """
        orientation = Orientation(orientation)
        sx, sy = orientation.signs
        ids = self._structures[orientation].candidates(q.reflect(sx, sy))
        if len(ids) < self.c:
            return AnchoredSquareResult(support=tuple(self.points[i] for i in ids))

        offsets = sorted(
            (max(abs(self.points[i].x - q.x), abs(self.points[i].y - q.y)), i) for i in ids
        )
        side = offsets[self.c - 1][0]
        return AnchoredSquareResult(side=side, support=tuple(self.points[i] for _, i in offsets))

    def corner_sides(self, rect: Rect) -> Dict[Orientation, AnchoredSquareResult]:
        """Anchored squares at the four corners of rect, each growing into it"""
        bottom_left, bottom_right, top_right, top_left = rect.corners()
        return {
            Orientation.NE: self.query(bottom_left, Orientation.NE),
            Orientation.NW: self.query(bottom_right, Orientation.NW),
            Orientation.SW: self.query(top_right, Orientation.SW),
            Orientation.SE: self.query(top_left, Orientation.SE),
        }

    def entry_count(self) -> int:
        return sum(structure.entry_count() for structure in self._structures.values())


def anchored_side_brute(points: Sequence[Point], q: Point, c: int, orientation: Orientation) -> float:
    """c-th smallest L-infinity offset over the closed quadrant, by scanning"""
    sx, sy = Orientation(orientation).signs
    offsets = sorted(
        max(abs(p.x - q.x), abs(p.y - q.y))
        for p in points
        if sx * (p.x - q.x) >= 0 and sy * (p.y - q.y) >= 0
    )
    return offsets[c - 1] if len(offsets) >= c else math.inf
