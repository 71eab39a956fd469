"""
rcp verify: compare index answers with the brute-force oracle
"""

import argparse
import logging

from cli.dependencies import build_index, get_index_settings, load_points
from cli.models import FatnessRange
from services.datasets import random_rectangles
from services.points_io import read_queries
from services.verification import verify_index

logger = logging.getLogger(__name__)

EXIT_MISMATCH = 1


def add_parsers(subparsers, common: argparse.ArgumentParser, index_options: argparse.ArgumentParser) -> None:
    verify = subparsers.add_parser("verify", parents=[common, index_options],
                                   help="check answers against brute force")
    verify.add_argument("points")
    verify.add_argument("queries", nargs="?", default=None,
                        help="queries file; omit to use --random rectangles")
    verify.add_argument("--random", type=int, default=1000, help="random rectangles when no file is given")
    verify.add_argument("--fatness", type=float, nargs=2, default=(1.0, 64.0), metavar=("LO", "HI"))
    verify.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    points = load_points(args.points, args.jitter, args.seed)
    if args.queries is not None:
        rects = read_queries(args.queries)
    else:
        fatness = FatnessRange(lo=args.fatness[0], hi=args.fatness[1]).as_tuple()
        rects = random_rectangles(points, args.random, fatness, args.seed)

    index = build_index(points, get_index_settings(args))
    report = verify_index(index, rects, args.workers)

    print(report.summary())
    for mismatch in report.mismatches[:10]:
        detail = f" ({mismatch.error})" if mismatch.error else ""
        print(f"line {mismatch.line}: rect {mismatch.rect}: oracle {mismatch.expected}, "
              f"index {mismatch.actual}{detail}")
    return 0 if report.ok else EXIT_MISMATCH
