"""
Candidate-pair experiments.

A pair p, q is a candidate pair for a family of regions if some region R of
the family has p, q as the closest pair of R ∩ S. This module builds the
instance whose fat-rectangle candidate pairs number (n/2)^2, decides
membership in the order-k L-infinity Delaunay graph exactly, samples
square-family candidate pairs, and enumerates the quadrant-family candidate
pairs.
"""

import bisect
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from exceptions import AnalysisParameterError
from geometry.closest_pair import PairResult
from geometry.primitives import Point, Rect, check_general_position, pair_key
from services.datasets import colliding_rows, uniform_points
from services.rcp_index import brute_force_query

logger = logging.getLogger(__name__)

Pair = Tuple[Point, Point]

MAX_ARC = 1e-2


def _ordered(p: Point, q: Point) -> Pair:
    return (p, q) if p < q else (q, p)


@dataclass(frozen=True, slots=True)
class CandidatePairWitness:
    pair: Pair
    rect: Rect
    fatness: float


def gen_lower_bound_instance(n: int, arc: float = Config.LOWER_BOUND_ARC,
                             seed: int = Config.DEFAULT_SEED) -> List[Point]:
    """
    Two tight clusters on the unit circle, around (√2/2, √2/2) and its antipode.

    Args:
        n: Even number of points, at least 4
        arc: Angular half-width of each cluster in radians, in (0, 1e-2]
        seed: Generator seed

    Returns:
        n/2 points near each end of the diagonal, coordinates pairwise distinct
    """
    if n < 4 or n % 2:
        raise AnalysisParameterError(f"n must be an even integer >= 4, got {n}")
    if not 0 < arc <= MAX_ARC:
        raise AnalysisParameterError(f"arc must lie in (0, {MAX_ARC}], got {arc}")

    rng = np.random.default_rng(seed)
    half = n // 2
    centres = np.concatenate([np.full(half, math.pi / 4), np.full(half, 5 * math.pi / 4)])
    angles = centres + rng.uniform(-arc, arc, size=n)
    coords = np.column_stack([np.cos(angles), np.sin(angles)])

    # a colliding point is redrawn inside its own cluster
    collided = colliding_rows(coords)
    while len(collided):
        angles[collided] = centres[collided] + rng.uniform(-arc, arc, size=len(collided))
        coords[collided] = np.column_stack([np.cos(angles[collided]), np.sin(angles[collided])])
        collided = colliding_rows(coords)
    return [Point(float(x), float(y)) for x, y in coords.tolist()]


def is_candidate_witness(p: Point, q: Point, points: Sequence[Point],
                         fatness: float) -> Optional[CandidatePairWitness]:
    """
    Check whether the corner rectangle of p and q proves p, q a candidate pair.

    The witness exists when the rectangle with opposite corners p and q has
    aspect ratio at most ``fatness`` and p, q is the closest pair of the
    points inside it.
    """
    if p.x == q.x or p.y == q.y:
        return None
    rect = Rect.from_corners(p, q)
    if rect.aspect_ratio > fatness:
        return None
    result = brute_force_query(points, rect)
    if result.pair != _ordered(p, q):
        return None
    return CandidatePairWitness(pair=_ordered(p, q), rect=rect, fatness=fatness)


@dataclass(frozen=True, slots=True)
class LowerBoundReport:
    n: int
    fatness: float
    cross_pairs: int
    verified: int

    @property
    def expected(self) -> int:
        return (self.n // 2) ** 2


def verify_lower_bound(n: int, fatness: float = 1.1, arc: float = Config.LOWER_BOUND_ARC,
                       seed: int = Config.DEFAULT_SEED) -> LowerBoundReport:
    """Witness-check every cross pair of the lower-bound instance"""
    if not fatness > 1:
        raise AnalysisParameterError(f"fatness must exceed 1, got {fatness}")
    points = gen_lower_bound_instance(n, arc, seed)
    upper = [p for p in points if p.x + p.y > 0]
    lower = [p for p in points if p.x + p.y < 0]
    verified = sum(
        1 for p in upper for q in lower if is_candidate_witness(p, q, points, fatness) is not None
    )
    report = LowerBoundReport(n=n, fatness=fatness, cross_pairs=len(upper) * len(lower), verified=verified)
    logger.info(f"Lower-bound instance n={n}: {verified}/{report.cross_pairs} cross pairs verified")
    return report


# Exact square geometry

def _coords(p: Point, axis: int) -> Fraction:
    return Fraction(p.x if axis == 0 else p.y)


def _best_square(p: Point, q: Point, points: Sequence[Point]) -> Tuple[int, Optional[Rect]]:
    """
    Fewest points strictly inside a square with p and q on its boundary.

    Only squares of side m = max(|dx|, |dy|) with p and q on opposite sides
    across the longer offset are needed: every other boundary square
    contains one of them and interior counts only grow with containment.
    Such squares slide along the shorter axis over a closed interval; the
    count is piecewise constant in the slide offset with breakpoints at
    the other points' coordinates, so it suffices to evaluate at
    breakpoints, interval ends and midpoints. Arithmetic is exact.
    """
    dx = abs(Fraction(p.x) - Fraction(q.x))
    dy = abs(Fraction(p.y) - Fraction(q.y))
    m = max(dx, dy)
    axes = [0] if dx > dy else [1] if dy > dx else [0, 1]

    best_count, best_rect = math.inf, None
    for long_axis in axes:
        short_axis = 1 - long_axis
        start = min(_coords(p, long_axis), _coords(q, long_axis))
        hi_slide = min(_coords(p, short_axis), _coords(q, short_axis))
        lo_slide = max(_coords(p, short_axis), _coords(q, short_axis)) - m

        strip = sorted(
            _coords(r, short_axis)
            for r in points
            if start < _coords(r, long_axis) < start + m
        )
        breaks = {lo_slide, hi_slide}
        for value in strip:
            for b in (value, value - m):
                if lo_slide <= b <= hi_slide:
                    breaks.add(b)
        ordered = sorted(breaks)
        samples = ordered + [(a + b) / 2 for a, b in zip(ordered, ordered[1:])]

        for slide in samples:
            count = bisect.bisect_left(strip, slide + m) - bisect.bisect_right(strip, slide)
            if count < best_count:
                best_count = count
                lo = (float(start), float(start + m))
                across = (float(slide), float(slide + m))
                best_rect = Rect(*lo, *across) if long_axis == 0 else Rect(*across, *lo)
    return best_count, best_rect


def del_square_edge(p: Point, q: Point, points: Sequence[Point], k: int) -> bool:
    """
    Is pq an edge of the order-k L-infinity Delaunay graph of points?

    True iff some axis-parallel square has p and q on its boundary and at
    most k points strictly inside.
    """
    if p == q:
        raise AnalysisParameterError("del_square_edge needs two distinct points")
    count, _ = _best_square(p, q, points)
    return count <= k


def find_square_witness(p: Point, q: Point, points: Sequence[Point], k: int) -> Optional[Rect]:
    """Square behind a positive del_square_edge answer (rounded to floats), else None"""
    if p == q:
        raise AnalysisParameterError("find_square_witness needs two distinct points")
    count, rect = _best_square(p, q, points)
    return rect if count <= k else None


@dataclass(frozen=True, slots=True)
class SquareSurvey:
    pairs: FrozenSet[Pair]
    squares: int

    @property
    def count(self) -> int:
        return len(self.pairs)


def _structured_squares(points: Sequence[Point]) -> Iterable[Rect]:
    """For every ordered pair (r, t), the square cornered at r reaching t"""
    for r in points:
        for t in points:
            if r == t:
                continue
            side = max(abs(t.x - r.x), abs(t.y - r.y)) * (1 + 1e-9)
            x0 = r.x if t.x >= r.x else r.x - side
            y0 = r.y if t.y >= r.y else r.y - side
            yield Rect(x0, x0 + side, y0, y0 + side)


def square_candidate_survey(points: Sequence[Point], trials: int = Config.SURVEY_TRIALS,
                            seed: int = Config.DEFAULT_SEED) -> SquareSurvey:
    """
    Sample square-family candidate pairs with the brute-force oracle.

    The family is every square cornered at one point and just reaching
    another, plus ``trials`` random squares over the bounding box. The
    result is a subset of the true candidate pairs.
    """
    points = list(points)
    found = set()
    squares = 0

    def visit(rect: Rect) -> None:
        nonlocal squares
        squares += 1
        result = brute_force_query(points, rect)
        if result.pair is not None:
            found.add(result.pair)

    for rect in _structured_squares(points):
        visit(rect)

    if points and trials > 0:
        rng = np.random.default_rng(seed)
        xs = [p.x for p in points]
        ys = [p.y for p in points]
        extent = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
        for _ in range(trials):
            side = extent * rng.uniform(0.01, 1.0)
            x0 = rng.uniform(min(xs) - side, max(xs))
            y0 = rng.uniform(min(ys) - side, max(ys))
            visit(Rect(x0, x0 + side, y0, y0 + side))

    logger.debug(f"Square survey over {squares} squares found {len(found)} pairs")
    return SquareSurvey(pairs=frozenset(found), squares=squares)


@dataclass(frozen=True, slots=True)
class SurveyRow:
    n: int
    pairs: int
    squares: int
    in_del2: int

    @property
    def per_point(self) -> float:
        return self.pairs / self.n if self.n else 0.0


def survey_growth(sizes: Sequence[int], trials: int = Config.SURVEY_TRIALS,
                  seed: int = Config.DEFAULT_SEED) -> List[SurveyRow]:
    """Square survey over uniform sets of each size, with the Delaunay check on every pair"""
    rows = []
    for n in sizes:
        points = uniform_points(n, seed)
        survey = square_candidate_survey(points, trials, seed)
        in_del2 = sum(1 for p, q in survey.pairs if del_square_edge(p, q, points, 2))
        rows.append(SurveyRow(n=n, pairs=survey.count, squares=survey.squares, in_del2=in_del2))
        logger.info(f"Square survey n={n}: {survey.count} pairs, {in_del2} in Del(S, 2)")
    return rows


def growth_slope(rows: Sequence[SurveyRow]) -> float:
    """Least-squares slope of pair count against n"""
    if len(rows) < 2:
        return 0.0
    slope, _ = np.polyfit([r.n for r in rows], [r.pairs for r in rows], 1)
    return float(slope)


# Quadrant family

def quadrant_candidate_pairs(points: Sequence[Point]) -> FrozenSet[Pair]:
    """
    All candidate pairs for the family of closed upper-right quadrants.

    For each corner abscissa the points with x >= a_x are inserted in
    decreasing y; after each insertion the running closest pair is the
    answer for a_y equal to the inserted point's y.
    """
    points = list(points)
    check_general_position(points, "xy")
    found = set()
    for a_x in sorted({p.x for p in points}):
        members = sorted((p for p in points if p.x >= a_x), key=lambda p: -p.y)
        best = PairResult()
        xs: List[float] = []
        ys: List[float] = []
        for p in members:
            if xs:
                d2 = (np.asarray(xs) - p.x) ** 2 + (np.asarray(ys) - p.y) ** 2
                shortlist = np.flatnonzero(d2 <= d2.min() * (1 + 1e-9))
                nearest = min((members[int(i)] for i in shortlist), key=lambda r: pair_key(p, r))
                candidate = PairResult.of(p, nearest)
                if candidate.better_than(best):
                    best = candidate
            xs.append(p.x)
            ys.append(p.y)
            if best.pair is not None:
                found.add(best.pair)
    return frozenset(found)


def _orient(a: Point, b: Point, c: Point) -> int:
    value = ((Fraction(b.x) - Fraction(a.x)) * (Fraction(c.y) - Fraction(a.y))
             - (Fraction(b.y) - Fraction(a.y)) * (Fraction(c.x) - Fraction(a.x)))
    return (value > 0) - (value < 0)


def pairs_cross(first: Pair, second: Pair) -> bool:
    """True iff the two segments cross at a point interior to both"""
    a, b = first
    c, d = second
    return (_orient(a, b, c) * _orient(a, b, d) < 0
            and _orient(c, d, a) * _orient(c, d, b) < 0)


@dataclass(frozen=True, slots=True)
class QuadrantReport:
    n: int
    pairs: int
    crossings: int = 0
    crossing_examples: Tuple[Tuple[Pair, Pair], ...] = field(default_factory=tuple)


def quadrant_candidate_report(points: Sequence[Point]) -> QuadrantReport:
    """Enumerate quadrant candidate pairs and count crossing pairs of them"""
    pairs = sorted(quadrant_candidate_pairs(points))
    crossings = []
    for i, first in enumerate(pairs):
        for second in pairs[i + 1:]:
            if pairs_cross(first, second):
                crossings.append((first, second))
    return QuadrantReport(n=len(points), pairs=len(pairs), crossings=len(crossings),
                          crossing_examples=tuple(crossings[:3]))
