"""
rcp gen / rcp gen-queries: seeded datasets and query batches
"""

import argparse
import logging

from cli.dependencies import load_points, open_output
from cli.models import FatnessRange
from services.datasets import Distribution, generate, random_rectangles
from services.points_io import write_points, write_queries

logger = logging.getLogger(__name__)


def add_parsers(subparsers, common: argparse.ArgumentParser) -> None:
    gen = subparsers.add_parser("gen", parents=[common], help="generate a points file")
    gen.add_argument("dist", choices=[d.value for d in Distribution])
    gen.add_argument("--n", type=int, required=True, help="number of points")
    gen.add_argument("--out", default="-", help="output path ('-' for stdout)")
    gen.set_defaults(handler=run_gen)

    queries = subparsers.add_parser("gen-queries", parents=[common], help="generate a queries file")
    queries.add_argument("--points", required=True, help="points file the rectangles are placed around")
    queries.add_argument("--count", type=int, default=1000)
    queries.add_argument("--fatness", type=float, nargs=2, default=(1.0, 32.0), metavar=("LO", "HI"))
    queries.add_argument("--out", default="-")
    queries.set_defaults(handler=run_gen_queries)


def run_gen(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise ValueError(f"--n must be >= 0, got {args.n}")
    points = generate(Distribution(args.dist), args.n, args.seed)
    with open_output(args.out) as stream:
        write_points(stream, points, f"rcp gen {args.dist} n={args.n} seed={args.seed}")
    logger.info(f"Generated {len(points)} {args.dist} points")
    return 0


def run_gen_queries(args: argparse.Namespace) -> int:
    points = load_points(args.points)
    fatness = FatnessRange(lo=args.fatness[0], hi=args.fatness[1]).as_tuple()
    rects = random_rectangles(points, args.count, fatness, args.seed)
    header = f"rcp gen-queries count={args.count} fatness={fatness[0]:g}..{fatness[1]:g} seed={args.seed}"
    with open_output(args.out) as stream:
        write_queries(stream, rects, header)
    return 0
