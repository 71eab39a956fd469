"""
Corner squares and shrunken rectangles of a query rectangle.

For an anchor size delta (0 < delta <= l/2) the four corner squares are

    C1 top-right, C2 top-left, C3 bottom-left, C4 bottom-right

and each B_k is R with two adjacent boundary strips of width delta removed:

    B1 = [ax, bx-d] x [ay, by-d]    (drops the top and right strips)
    B2 = [ax+d, bx] x [ay, by-d]    (drops the top and left strips)
    B3 = [ax+d, bx] x [ay+d, by]    (drops the bottom and left strips)
    B4 = [ax, bx-d] x [ay+d, by]    (drops the bottom and right strips)

All regions are closed. B_k is where a point of S_k may start a Yao_k edge of
length < delta without leaving R.
"""

from dataclasses import dataclass
from typing import Tuple

from exceptions import GeometryError
from geometry.primitives import Point, Rect


@dataclass(frozen=True, slots=True)
class RegionSet:
    """Corner squares C1..C4 and shrunken rectangles B1..B4 for one (R, delta)"""
    rect: Rect
    delta: float
    corners: Tuple[Rect, Rect, Rect, Rect]
    shrunk: Tuple[Rect, Rect, Rect, Rect]

    def corner(self, k: int) -> Rect:
        return self.corners[k - 1]

    def shrunken(self, k: int) -> Rect:
        return self.shrunk[k - 1]

    def in_corner(self, k: int, p: Point) -> bool:
        return self.corners[k - 1].contains(p)

    def in_shrunken(self, k: int, p: Point) -> bool:
        return self.shrunk[k - 1].contains(p)


def compute_regions(rect: Rect, delta: float) -> RegionSet:
    """
    Build the C/B partition of a rectangle.

    Args:
        rect: Query rectangle
        delta: Anchor size, 0 < delta <= shortest side / 2

    Returns:
        RegionSet for (rect, delta)
    """
    half = rect.shortest_side / 2
    if not 0 < delta <= half:
        raise GeometryError(f"anchor size {delta} outside (0, {half}] for {rect}")

    ax, bx, ay, by = rect.ax, rect.bx, rect.ay, rect.by
    left, right = ax + delta, bx - delta
    bottom, top = ay + delta, by - delta

    corners = (
        Rect(right, bx, top, by),
        Rect(ax, left, top, by),
        Rect(ax, left, ay, bottom),
        Rect(right, bx, ay, bottom),
    )
    shrunk = (
        Rect(ax, right, ay, top),
        Rect(left, bx, ay, top),
        Rect(left, bx, bottom, by),
        Rect(ax, right, bottom, by),
    )
    return RegionSet(rect=rect, delta=delta, corners=corners, shrunk=shrunk)
