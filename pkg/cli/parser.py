"""
Argument parser for the rcp command
"""

import argparse

from cli.commands import bench, experiment, gen, query, verify
from cli.models import CascadingMode
from config import Config
from structures.rmq import RmqMethod
from structures.yao import YaoMethod

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    common.add_argument("--log-level", choices=LOG_LEVELS, default=None,
                        help=f"logging level (default {Config.LOG_LEVEL})")
    return common


def _index_options() -> argparse.ArgumentParser:
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument("--c", type=int, default=Config.ANCHOR_COUNT,
                         help="points per anchored square (at least 5)")
    options.add_argument("--cascading", choices=[m.value for m in CascadingMode],
                         default=CascadingMode.ON.value if Config.CASCADING else CascadingMode.FALLBACK.value)
    options.add_argument("--rmq", choices=[m.value for m in RmqMethod], default=Config.RMQ_METHOD)
    options.add_argument("--yao", choices=[m.value for m in YaoMethod], default=Config.YAO_METHOD)
    options.add_argument("--jitter", type=float, default=None, metavar="EPS",
                         help="perturb input coordinates by up to EPS to break ties")
    options.add_argument("--workers", type=int, default=Config.WORKERS)
    return options


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rcp", description="Range closest-pair index and experiments")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()
    index_options = _index_options()

    gen.add_parsers(subparsers, common)
    query.add_parsers(subparsers, common, index_options)
    verify.add_parsers(subparsers, common, index_options)
    bench.add_parsers(subparsers, common, index_options)
    experiment.add_parsers(subparsers, common)
    return parser
