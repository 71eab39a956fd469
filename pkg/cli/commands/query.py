"""
rcp query: answer a batch of rectangles
"""

import argparse

from cli.dependencies import build_index, get_index_settings, load_points, open_output
from services.points_io import format_pair, read_queries
from services.verification import run_queries


def add_parsers(subparsers, common: argparse.ArgumentParser, index_options: argparse.ArgumentParser) -> None:
    query = subparsers.add_parser("query", parents=[common, index_options], help="answer queries")
    query.add_argument("points")
    query.add_argument("queries")
    query.add_argument("--out", default="-")
    query.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    points = load_points(args.points, args.jitter, args.seed)
    rects = read_queries(args.queries)
    index = build_index(points, get_index_settings(args))
    outcomes = run_queries(index, rects, args.workers)
    with open_output(args.out) as stream:
        for outcome in outcomes:
            stream.write(f"{format_pair(outcome.as_pair_result())}\t{outcome.path.value}\n")
    return 0
