"""
Planar primitives: points, closed axis-parallel rectangles, quadrants and the
packing threshold that decides when a rectangle is "crowded".
"""

import math
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Sequence, Tuple

from exceptions import GeneralPositionError, GeometryError


@dataclass(frozen=True, order=True, slots=True)
class Point:
    """Point with finite 64-bit coordinates; ordering is lexicographic (x, then y)"""
    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def reflect(self, sx: int, sy: int) -> "Point":
        return Point(sx * self.x, sy * self.y)

    def __str__(self) -> str:
        return f"({self.x!r}, {self.y!r})"


@dataclass(frozen=True, slots=True)
class Rect:
    """
    Closed rectangle [ax, bx] x [ay, by]

    Infinite bounds are accepted so that internal three- and two-sided
    queries can reuse the type; NaN and empty extents are rejected.
    """
    ax: float
    bx: float
    ay: float
    by: float

    def __post_init__(self):
        if any(math.isnan(v) for v in (self.ax, self.bx, self.ay, self.by)):
            raise GeometryError("rectangle bounds must not be NaN")
        if not (self.ax < self.bx and self.ay < self.by):
            raise GeometryError(
                f"degenerate rectangle [{self.ax}, {self.bx}] x [{self.ay}, {self.by}]: "
                f"need ax < bx and ay < by"
            )

    @classmethod
    def from_corners(cls, p: Point, q: Point) -> "Rect":
        """Smallest rectangle having p and q as opposite corners"""
        return cls(min(p.x, q.x), max(p.x, q.x), min(p.y, q.y), max(p.y, q.y))

    @property
    def width(self) -> float:
        return self.bx - self.ax

    @property
    def height(self) -> float:
        return self.by - self.ay

    @property
    def shortest_side(self) -> float:
        return min(self.width, self.height)

    @property
    def longest_side(self) -> float:
        return max(self.width, self.height)

    @property
    def aspect_ratio(self) -> float:
        if not self.is_bounded:
            return math.inf
        return self.longest_side / self.shortest_side

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def is_bounded(self) -> bool:
        """False when a side is infinite or too long to represent"""
        return math.isfinite(self.width) and math.isfinite(self.height)

    @property
    def is_square(self) -> bool:
        return self.width == self.height

    def contains(self, p: Point) -> bool:
        return self.ax <= p.x <= self.bx and self.ay <= p.y <= self.by

    def contains_rect(self, other: "Rect") -> bool:
        return (self.ax <= other.ax and other.bx <= self.bx
                and self.ay <= other.ay and other.by <= self.by)

    def corners(self) -> Tuple[Point, Point, Point, Point]:
        """Bottom-left, bottom-right, top-right, top-left"""
        return (
            Point(self.ax, self.ay),
            Point(self.bx, self.ay),
            Point(self.bx, self.by),
            Point(self.ax, self.by),
        )


class Quadrant(IntEnum):
    """Closed quadrants of a point, numbered counter-clockwise from the upper right"""
    Q1 = 1
    Q2 = 2
    Q3 = 3
    Q4 = 4

    @property
    def signs(self) -> Tuple[int, int]:
        return _QUADRANT_SIGNS[self]


_QUADRANT_SIGNS = {
    Quadrant.Q1: (1, 1),
    Quadrant.Q2: (-1, 1),
    Quadrant.Q3: (-1, -1),
    Quadrant.Q4: (1, -1),
}


class Orientation(str, Enum):
    """Which corner of an anchored square sits at the query point"""
    NE = "ne"  # bottom-left corner at q, grows up and right
    NW = "nw"  # bottom-right corner at q
    SW = "sw"  # top-right corner at q
    SE = "se"  # top-left corner at q

    @property
    def quadrant(self) -> Quadrant:
        return _ORIENTATION_QUADRANT[self]

    @property
    def signs(self) -> Tuple[int, int]:
        return self.quadrant.signs

    @property
    def arrow(self) -> str:
        return _ORIENTATION_ARROW[self]


_ORIENTATION_QUADRANT = {
    Orientation.NE: Quadrant.Q1,
    Orientation.NW: Quadrant.Q2,
    Orientation.SW: Quadrant.Q3,
    Orientation.SE: Quadrant.Q4,
}

_ORIENTATION_ARROW = {
    Orientation.NE: "↗",
    Orientation.NW: "↖",
    Orientation.SW: "↙",
    Orientation.SE: "↘",
}


def distance(p: Point, q: Point) -> float:
    """Euclidean distance |pq|; symmetric bit for bit in its arguments"""
    return math.hypot(p.x - q.x, p.y - q.y)


def quadrant_contains(p: Point, k: int, q: Point) -> bool:
    """True iff q lies in the closed quadrant Q_k(p)"""
    sx, sy = Quadrant(k).signs
    x_ok = q.x >= p.x if sx > 0 else q.x <= p.x
    y_ok = q.y >= p.y if sy > 0 else q.y <= p.y
    return x_ok and y_ok


def packing_threshold(f: float) -> float:
    """
    Point count above which a rectangle of aspect ratio f is guaranteed to
    have closest-pair distance below half its shortest side.

    Args:
        f: Aspect ratio, at least 1

    Returns:
        4 * ceil(4 f) as an int, or math.inf when 4 f overflows
    """
    if not f >= 1:
        raise GeometryError(f"aspect ratio must be >= 1, got {f}")
    if math.isinf(4 * f):
        return math.inf
    return 4 * math.ceil(4 * f)


def check_general_position(points: Sequence[Point], axes: str = "xy") -> None:
    """
    Reject point sets in which two points share a coordinate.

    Args:
        points: Points to validate
        axes: Which coordinates must be pairwise distinct ("x", "y" or "xy")

    Raises:
        GeneralPositionError naming the first offending pair found
    """
    for axis in axes:
        if axis == "x":
            ordered = sorted(points)
        else:
            ordered = sorted(points, key=lambda p: (p.y, p.x))
        for first, second in zip(ordered, ordered[1:]):
            if getattr(first, axis) == getattr(second, axis):
                raise GeneralPositionError(first, second, axis)


def pair_key(p: Point, q: Point) -> Tuple[float, Point, Point]:
    """Ordering key (|pq|, smaller point, larger point) implementing the lexicographic tie rule"""
    if q < p:
        p, q = q, p
    return distance(p, q), p, q
