"""
Text formats for point sets, query batches and query answers.

Points files hold one "x y" pair per line and query files one
"ax ay bx by" rectangle per line; '#' starts a comment. Parse failures
raise PointsFileError carrying the 1-based line number.
"""

import logging
import math
from pathlib import Path
from typing import IO, Iterable, List, Sequence, Union

from config import Config
from exceptions import GeometryError, PointsFileError
from geometry.closest_pair import PairResult
from geometry.primitives import Point, Rect

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _rows(lines: Iterable[str], width: int, what: str):
    for number, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        tokens = text.split()
        if len(tokens) != width:
            raise PointsFileError(f"expected {width} numbers for a {what}, got {len(tokens)}", number)
        try:
            values = [float(token) for token in tokens]
        except ValueError:
            raise PointsFileError(f"not a number in {text!r}", number)
        if not all(math.isfinite(v) for v in values):
            raise PointsFileError(f"non-finite coordinate in {text!r}", number)
        yield number, values


def parse_points(lines: Iterable[str]) -> List[Point]:
    return [Point(x, y) for _, (x, y) in _rows(lines, 2, "point")]


def parse_queries(lines: Iterable[str]) -> List[Rect]:
    rects = []
    for number, (ax, ay, bx, by) in _rows(lines, 4, "query"):
        try:
            rects.append(Rect(ax, bx, ay, by))
        except GeometryError as e:
            raise PointsFileError(str(e), number)
    return rects


def read_points(path: PathLike) -> List[Point]:
    with open(path, encoding="utf-8") as handle:
        points = parse_points(handle)
    logger.info(f"Read {len(points)} points from {path}")
    return points


def read_queries(path: PathLike) -> List[Rect]:
    with open(path, encoding="utf-8") as handle:
        rects = parse_queries(handle)
    logger.info(f"Read {len(rects)} queries from {path}")
    return rects


def write_points(stream: IO[str], points: Sequence[Point], header: str) -> None:
    """Header comment, then one point per line with round-trip exact floats"""
    stream.write(f"# {header}\n")
    for p in points:
        stream.write(f"{float(p.x)!r} {float(p.y)!r}\n")


def write_queries(stream: IO[str], rects: Sequence[Rect], header: str) -> None:
    stream.write(f"# {header}\n")
    for r in rects:
        stream.write(f"{float(r.ax)!r} {float(r.ay)!r} {float(r.bx)!r} {float(r.by)!r}\n")


def format_number(value: float, digits: int = Config.DISTANCE_DIGITS) -> str:
    return f"{value:.{digits}g}"


def format_pair(result: PairResult, digits: int = Config.DISTANCE_DIGITS) -> str:
    """ "dist px py qx qy", or "NONE" without a pair"""
    if result.pair is None:
        return "NONE"
    p, q = result.pair
    return " ".join(format_number(v, digits) for v in (result.dist, p.x, p.y, q.x, q.y))
