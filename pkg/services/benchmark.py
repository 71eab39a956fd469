"""
Doubling benchmark: build time, query latency per fatness bucket and measured space.

Every size is built twice, with cascading and with the per-node search
fallback, and both answer the same rectangles. Space figures come from the
cascading build.
"""

import logging
import statistics
import time
from typing import Dict, List, Sequence, Tuple

from config import Config
from geometry.primitives import Rect
from services.datasets import random_rectangles, uniform_points
from services.rcp_index import QueryPath, RcpIndex
from services.reports import BenchRow

logger = logging.getLogger(__name__)

Bucket = Tuple[float, float]

DEFAULT_BUCKETS: Tuple[Bucket, ...] = ((1.0, 2.0), (2.0, 4.0), (4.0, 8.0), (8.0, 16.0), (16.0, 32.0))


def buckets_within(lo: float, hi: float) -> List[Bucket]:
    """Default fatness buckets clipped to [lo, hi]"""
    clipped = [(max(a, lo), min(b, hi)) for a, b in DEFAULT_BUCKETS if a < hi and b > lo]
    return clipped or [(lo, hi)]


def _median_us(index: RcpIndex, rects: Sequence[Rect]) -> Tuple[float, int]:
    timings = []
    small = 0
    for rect in rects:
        t0 = time.perf_counter()
        outcome = index.query(rect)
        timings.append(time.perf_counter() - t0)
        small += outcome.path is QueryPath.SMALL
    return (statistics.median(timings) * 1e6 if timings else 0.0), small


def bench_size(n: int, queries: int, buckets: Sequence[Bucket], seed: int = Config.DEFAULT_SEED,
               **index_options) -> List[BenchRow]:
    """Build both modes over n uniform points and time ``queries`` rectangles per bucket"""
    points = uniform_points(n, seed)
    index_options.pop("cascading", None)

    indexes: Dict[bool, RcpIndex] = {}
    build_seconds = 0.0
    for cascading in (True, False):
        started = time.perf_counter()
        indexes[cascading] = RcpIndex(points, cascading=cascading, **index_options)
        if cascading:
            build_seconds = time.perf_counter() - started
    index = indexes[True]

    rows = []
    for bucket_number, bucket in enumerate(buckets):
        rects = random_rectangles(points, queries, bucket, seed + bucket_number)
        cascading_us, small = _median_us(index, rects)
        fallback_us, _ = _median_us(indexes[False], rects)
        rows.append(BenchRow(
            n=n,
            fatness_lo=bucket[0],
            fatness_hi=bucket[1],
            queries=len(rects),
            build_seconds=build_seconds,
            cascading_query_us=cascading_us,
            fallback_query_us=fallback_us,
            small_path_share=small / len(rects) if rects else 0.0,
            entries=index.entry_count(),
            entry_constant=index.entry_bound_constant(),
            rmq_words_per_value=index.rmq_words_per_value(),
        ))
    logger.info(f"Benchmarked n={n}: build {build_seconds:.3f}s, C={index.entry_bound_constant():.2f}")
    return rows


def run_benchmark(sizes: Sequence[int], queries: int, fatness: Tuple[float, float],
                  seed: int = Config.DEFAULT_SEED, **index_options) -> List[BenchRow]:
    if list(sizes) != sorted(sizes):
        raise ValueError(f"sizes must be ascending, got {list(sizes)}")
    buckets = buckets_within(*fatness)
    rows: List[BenchRow] = []
    for n in sizes:
        rows.extend(bench_size(n, queries, buckets, seed, **index_options))
    return rows


def doubling_ratios(rows: Sequence[BenchRow]) -> List[Tuple[int, float]]:
    """time(2n) / time(n) of the cascading build for the first bucket of consecutive doubled sizes"""
    first = {}
    for row in rows:
        first.setdefault(row.n, row.cascading_query_us)
    ratios = []
    for n, t in first.items():
        doubled = first.get(2 * n)
        if doubled is not None and t > 0:
            ratios.append((2 * n, doubled / t))
    return ratios


def constant_drift(rows: Sequence[BenchRow]) -> float:
    """Relative growth of the measured entry constant from the smallest to the largest size"""
    constants = {row.n: row.entry_constant for row in rows if row.n > 0}
    if len(constants) < 2:
        return 0.0
    ordered = [constants[n] for n in sorted(constants)]
    return ordered[-1] / ordered[0] - 1.0 if ordered[0] > 0 else 0.0


def space_problems(
    rows: Sequence[BenchRow],
    bound: float = Config.ENTRY_BOUND_CONSTANT,
    drift_limit: float = Config.ENTRY_DRIFT_LIMIT,
    rmq_bound: float = Config.RMQ_SPACE_CONSTANT,
) -> List[str]:
    """Violations of the space bound over a benchmark run, empty when it holds"""
    problems = []
    if not rows:
        return problems
    worst = max(row.entry_constant for row in rows)
    if worst > bound:
        problems.append(f"entry constant C = {worst:.3f} exceeds {bound}")
    drift = constant_drift(rows)
    if drift > drift_limit:
        problems.append(f"entry constant drifted {drift:+.1%} across sizes (limit {drift_limit:.0%})")
    rmq_worst = max(row.rmq_words_per_value for row in rows)
    if rmq_worst > rmq_bound:
        problems.append(f"RMQ stores {rmq_worst:.2f} words per weight (limit {rmq_bound})")
    return problems
