"""
rcp bench: doubling benchmark as TSV, failing when the space bound breaks
"""

import argparse

from cli.dependencies import get_index_settings
from cli.models import FatnessRange
from services.benchmark import constant_drift, doubling_ratios, run_benchmark, space_problems
from services.reports import BenchRow
from structures.rmq import RmqMethod

EXIT_SPACE_BOUND = 1


def add_parsers(subparsers, common: argparse.ArgumentParser, index_options: argparse.ArgumentParser) -> None:
    bench = subparsers.add_parser(
        "bench", parents=[common, index_options],
        help="benchmark build and queries (cascading and fallback are both timed)",
    )
    bench.add_argument("--sizes", type=int, nargs="+", default=[4096, 8192, 16384])
    bench.add_argument("--queries", type=int, default=200, help="queries per size and fatness bucket")
    bench.add_argument("--fatness", type=float, nargs=2, default=(1.0, 32.0), metavar=("LO", "HI"))
    bench.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    settings = get_index_settings(args)
    fatness = FatnessRange(lo=args.fatness[0], hi=args.fatness[1]).as_tuple()
    rows = run_benchmark(args.sizes, args.queries, fatness, args.seed, **settings.index_options())

    print(BenchRow.header())
    for row in rows:
        print(row.to_tsv())
    for n, ratio in doubling_ratios(rows):
        print(f"# time({n}) / time({n // 2}) = {ratio:.3f}")
    if not rows:
        return 0

    print(f"# entry constant C = {max(row.entry_constant for row in rows):.3f}, "
          f"drift = {constant_drift(rows):+.1%}, rmq = {settings.rmq_method.value}")
    problems = space_problems(rows)
    if settings.rmq_method is RmqMethod.SPARSE:
        for problem in problems:
            print(f"# sparse RMQ, reported only: {problem}")
        return 0
    for problem in problems:
        print(f"# FAIL: {problem}")
    return EXIT_SPACE_BOUND if problems else 0
