"""
Seeded point and rectangle generators.

Every generator is deterministic for a fixed seed and returns points in
general position: colliding x- or y-coordinates are redrawn from the same
generator until none remain.
"""

import logging
import math
from enum import Enum
from typing import Callable, List, Sequence, Tuple

import numpy as np

from config import Config
from geometry.primitives import Point, Rect

logger = logging.getLogger(__name__)


class Distribution(str, Enum):
    UNIFORM = "uniform"
    CLUSTERED = "clustered"
    GRID = "grid"
    CIRCLE_PAIR = "circle-pair"


def colliding_rows(coords: np.ndarray) -> np.ndarray:
    """Rows repeating an earlier row's x or y value"""
    bad = np.zeros(len(coords), dtype=bool)
    for axis in (0, 1):
        _, first = np.unique(coords[:, axis], return_index=True)
        repeated = np.ones(len(coords), dtype=bool)
        repeated[first] = False
        bad |= repeated
    return np.flatnonzero(bad)


def redraw_collisions(coords: np.ndarray, draw: Callable[[int], np.ndarray]) -> np.ndarray:
    """
    Replace rows sharing a coordinate until the set is in general position.

    Args:
        coords: (n, 2) array, modified in place
        draw: Returns k fresh (k, 2) rows
    """
    rows = colliding_rows(coords)
    while len(rows):
        logger.debug(f"Redrawing {len(rows)} colliding points")
        coords[rows] = draw(len(rows))
        rows = colliding_rows(coords)
    return coords


def _to_points(coords: np.ndarray) -> List[Point]:
    return [Point(float(x), float(y)) for x, y in coords.tolist()]


def uniform_points(n: int, seed: int = Config.DEFAULT_SEED) -> List[Point]:
    """n points uniform in the unit square"""
    rng = np.random.default_rng(seed)

    def draw(k: int) -> np.ndarray:
        return rng.random((k, 2))

    return _to_points(redraw_collisions(draw(n), draw))


def clustered_points(n: int, seed: int = Config.DEFAULT_SEED, clusters: int = 8,
                     spread: float = 0.02) -> List[Point]:
    """n points in Gaussian clusters around uniform centres"""
    rng = np.random.default_rng(seed)
    centres = rng.random((max(1, clusters), 2))

    def draw(k: int) -> np.ndarray:
        picks = rng.integers(0, len(centres), size=k)
        return centres[picks] + rng.normal(0.0, spread, size=(k, 2))

    return _to_points(redraw_collisions(draw(n), draw))


def grid_points(n: int, seed: int = Config.DEFAULT_SEED, wobble: float = 0.2) -> List[Point]:
    """First n cells of a square grid, each point perturbed inside its cell"""
    rng = np.random.default_rng(seed)
    side = max(1, math.ceil(math.sqrt(n)))
    cells = np.array([(i % side, i // side) for i in range(n)], dtype=np.float64).reshape(n, 2)

    def wiggle(k: int) -> np.ndarray:
        return rng.uniform(-wobble, wobble, size=(k, 2))

    coords = (cells + wiggle(n)) / side

    def draw(k: int) -> np.ndarray:
        return (cells[rng.integers(0, max(1, n), size=k)] + wiggle(k)) / side

    return _to_points(redraw_collisions(coords, draw))


def generate(distribution: Distribution, n: int, seed: int = Config.DEFAULT_SEED) -> List[Point]:
    """Dispatch to the generator for ``distribution``"""
    distribution = Distribution(distribution)
    if n < 0:
        raise ValueError(f"point count must be >= 0, got {n}")
    if distribution is Distribution.UNIFORM:
        return uniform_points(n, seed)
    if distribution is Distribution.CLUSTERED:
        return clustered_points(n, seed)
    if distribution is Distribution.GRID:
        return grid_points(n, seed)

    from services.analysis import gen_lower_bound_instance
    return gen_lower_bound_instance(n, Config.LOWER_BOUND_ARC, seed)


def jitter_points(points: Sequence[Point], eps: float, seed: int = Config.DEFAULT_SEED) -> List[Point]:
    """Add uniform noise in [-eps, eps] to every coordinate, then resolve collisions"""
    if not eps > 0:
        raise ValueError(f"jitter must be positive, got {eps}")
    if not points:
        return []
    rng = np.random.default_rng(seed)
    base = np.array([(p.x, p.y) for p in points], dtype=np.float64)
    coords = base + rng.uniform(-eps, eps, size=base.shape)

    # colliding points are re-jittered around their own input point
    rows = colliding_rows(coords)
    while len(rows):
        coords[rows] = base[rows] + rng.uniform(-eps, eps, size=(len(rows), 2))
        rows = colliding_rows(coords)
    return _to_points(coords)


def bounding_box(points: Sequence[Point]) -> Tuple[float, float, float, float]:
    """(min_x, max_x, min_y, max_y); the unit square when there are no points"""
    if not points:
        return 0.0, 1.0, 0.0, 1.0
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return min(xs), max(xs), min(ys), max(ys)


def random_rectangles(
    points: Sequence[Point],
    count: int,
    fatness: Tuple[float, float] = (1.0, 32.0),
    seed: int = Config.DEFAULT_SEED,
) -> List[Rect]:
    """
    Random query rectangles around a point set.

    Centres are drawn from the bounding box grown by a quarter on every side,
    so some rectangles straddle the data or miss it entirely. The aspect
    ratio is uniform in ``fatness`` and the shortest side log-uniform between
    1/200 and 1/2 of the box extent.
    """
    lo, hi = fatness
    if not 1 <= lo <= hi:
        raise ValueError(f"fatness range must satisfy 1 <= lo <= hi, got ({lo}, {hi})")
    rng = np.random.default_rng(seed)
    min_x, max_x, min_y, max_y = bounding_box(points)
    extent = max(max_x - min_x, max_y - min_y, 1e-9)
    margin = extent / 4

    rects: List[Rect] = []
    for _ in range(count):
        cx = rng.uniform(min_x - margin, max_x + margin)
        cy = rng.uniform(min_y - margin, max_y + margin)
        short = extent * math.exp(rng.uniform(math.log(1 / 200), math.log(1 / 2)))
        f = rng.uniform(lo, hi)
        width, height = (short * f, short) if rng.random() < 0.5 else (short, short * f)
        rects.append(Rect(cx - width / 2, cx + width / 2, cy - height / 2, cy + height / 2))
    return rects
