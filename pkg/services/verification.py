"""
Cross-check of index answers against the brute-force oracle.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

from exceptions import CornerOverflowError
from geometry.closest_pair import PairResult
from geometry.primitives import Rect
from services.points_io import format_pair
from services.rcp_index import QueryOutcome, RcpIndex, brute_force_query
from services.reports import Mismatch, VerifyReport

logger = logging.getLogger(__name__)


def run_queries(index: RcpIndex, rects: Sequence[Rect], workers: int = 1) -> List[QueryOutcome]:
    """Answer every rectangle; results follow input order for any worker count"""
    if workers <= 1 or len(rects) < 2:
        return [index.query(rect) for rect in rects]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(index.query, rects))


def _check(index: RcpIndex, rect: Rect) -> Tuple[PairResult, Optional[QueryOutcome], Optional[str]]:
    expected = brute_force_query(index.points, rect)
    try:
        return expected, index.query(rect), None
    except CornerOverflowError as e:
        return expected, None, str(e)


def _describe(rect: Rect) -> str:
    return f"{rect.ax!r} {rect.ay!r} {rect.bx!r} {rect.by!r}"


def verify_index(index: RcpIndex, rects: Sequence[Rect], workers: int = 1) -> VerifyReport:
    """
    Compare index answers with the oracle on every rectangle.

    A query matches when the distance is bitwise equal and the same pair is
    reported; a query that raises counts as a mismatch.
    """
    if workers > 1 and len(rects) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            checks = list(pool.map(lambda rect: _check(index, rect), rects))
    else:
        checks = [_check(index, rect) for rect in rects]

    report = VerifyReport(total=len(rects))
    for line, (rect, (expected, actual, error)) in enumerate(zip(rects, checks), start=1):
        if actual is not None and actual.dist == expected.dist and actual.pair == expected.pair:
            report.matched += 1
            continue
        report.mismatches.append(Mismatch(
            line=line,
            rect=_describe(rect),
            expected=format_pair(expected),
            actual=format_pair(actual.as_pair_result()) if actual is not None else "ERROR",
            error=error,
        ))

    if report.ok:
        logger.info(f"Verified {report.total} queries against the oracle")
    else:
        first = report.mismatches[0]
        logger.warning(
            f"{len(report.mismatches)} of {report.total} queries disagree; first on line {first.line}: "
            f"rect {first.rect}, oracle {first.expected}, index {first.actual}"
        )
    return report
