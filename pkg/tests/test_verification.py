import math

import pytest

from config import Config
from geometry.primitives import Point, Rect
from services.benchmark import buckets_within, constant_drift, doubling_ratios, run_benchmark, space_problems
from services.rcp_index import QueryOutcome, QueryPath, RcpIndex
from services.reports import BenchRow, VerifyReport
from services.verification import run_queries, verify_index


def test_run_queries_keeps_input_order(uniform_1024, queries_1024):
    index = RcpIndex(uniform_1024[:256])
    sequential = run_queries(index, queries_1024[:60], workers=1)
    parallel = run_queries(index, queries_1024[:60], workers=4)
    assert parallel == sequential


def test_verify_index_matches_oracle(uniform_1024, queries_1024):
    index = RcpIndex(uniform_1024[:256])

    report = verify_index(index, queries_1024[:80], workers=2)

    assert report.ok
    assert report.summary() == "80/80 OK"


def test_verify_empty_point_set():
    report = verify_index(RcpIndex([]), [Rect(0, 1, 0, 1), Rect(-5, 5, -5, 5)])
    assert report.summary() == "2/2 OK"


def test_verify_reports_injected_fault(mocker):
    points = [Point(0, 0), Point(3, 4), Point(10, 10)]
    index = RcpIndex(points)
    mocker.patch.object(
        index, "query", return_value=QueryOutcome(None, math.inf, QueryPath.SMALL),
    )

    report = verify_index(index, [Rect(20, 30, 20, 30), Rect(-1, 5, -1, 5)])

    assert not report.ok
    assert report.summary() == "1/2 MISMATCH"
    mismatch = report.mismatches[0]
    assert mismatch.line == 2
    assert mismatch.expected == "5 0 0 3 4"
    assert mismatch.actual == "NONE"


def test_verify_report_model_defaults():
    report = VerifyReport()
    assert report.ok
    assert report.mismatches == []


def test_buckets_within():
    assert buckets_within(1.0, 4.0) == [(1.0, 2.0), (2.0, 4.0)]
    assert buckets_within(3.0, 5.0) == [(3.0, 4.0), (4.0, 5.0)]
    assert buckets_within(40.0, 64.0) == [(40.0, 64.0)]


def test_run_benchmark_small_sizes():
    rows = run_benchmark([64, 128], queries=5, fatness=(1.0, 2.0), seed=1)

    assert [row.n for row in rows] == [64, 128]
    assert all(row.queries == 5 for row in rows)
    assert all(row.entries > 0 for row in rows)
    assert len(rows[0].to_tsv().split("\t")) == len(BenchRow.header().split("\t"))
    assert [n for n, _ in doubling_ratios(rows)] == [128]
    assert isinstance(constant_drift(rows), float)
    assert all(row.cascading_query_us > 0 and row.fallback_query_us > 0 for row in rows)
    assert all(0 < row.rmq_words_per_value <= Config.RMQ_SPACE_CONSTANT for row in rows)


def bench_row(n, entry_constant, rmq_words=5.0):
    return BenchRow(
        n=n, fatness_lo=1.0, fatness_hi=2.0, queries=10, build_seconds=0.1,
        cascading_query_us=20.0, fallback_query_us=30.0, small_path_share=0.5,
        entries=int(entry_constant * n), entry_constant=entry_constant, rmq_words_per_value=rmq_words,
    )


def test_space_problems_accepts_a_flat_constant():
    rows = [bench_row(4096, 100.0), bench_row(8192, 110.0), bench_row(16384, 124.0)]
    assert constant_drift(rows) == pytest.approx(0.24)
    assert space_problems(rows) == []


def test_space_problems_reports_drift_and_overflow():
    drifting = [bench_row(4096, 100.0), bench_row(8192, 130.0)]
    assert space_problems(drifting) == ["entry constant drifted +30.0% across sizes (limit 25%)"]

    too_large = [bench_row(4096, Config.ENTRY_BOUND_CONSTANT + 1.0)]
    assert space_problems(too_large) == [
        f"entry constant C = {Config.ENTRY_BOUND_CONSTANT + 1.0:.3f} exceeds {Config.ENTRY_BOUND_CONSTANT}"
    ]

    heavy_rmq = [bench_row(4096, 100.0, rmq_words=Config.RMQ_SPACE_CONSTANT + 1)]
    assert len(space_problems(heavy_rmq)) == 1


def test_space_problems_on_no_rows():
    assert space_problems([]) == []
