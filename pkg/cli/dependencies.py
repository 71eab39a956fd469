"""
Shared helpers for command handlers: option parsing into settings, point loading, output streams
"""

import argparse
import contextlib
import logging
import sys
from typing import IO, Iterator, List, Optional

from cli.models import CascadingMode, IndexSettings
from config import Config
from geometry.primitives import Point
from services.datasets import jitter_points
from services.points_io import read_points
from services.rcp_index import RcpIndex
from structures.rmq import RmqMethod
from structures.yao import YaoMethod

logger = logging.getLogger(__name__)


def get_index_settings(args: argparse.Namespace) -> IndexSettings:
    """IndexSettings from the shared index options"""
    return IndexSettings(
        c=args.c,
        cascading=CascadingMode(args.cascading) is CascadingMode.ON,
        rmq_method=RmqMethod(args.rmq),
        yao_method=YaoMethod(args.yao),
    )


def load_points(path: str, jitter: Optional[float] = None, seed: int = Config.DEFAULT_SEED) -> List[Point]:
    """Read the points file, perturbing it by up to jitter when one is given"""
    points = read_points(path)
    if jitter:
        logger.warning(f"Jitter of {jitter} applied to {len(points)} input points")
        points = jitter_points(points, jitter, seed)
    return points


def build_index(points: List[Point], settings: IndexSettings) -> RcpIndex:
    return RcpIndex(points, **settings.index_options())


@contextlib.contextmanager
def open_output(path: str) -> Iterator[IO[str]]:
    """Writable text stream for path; '-' is stdout"""
    if path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        yield handle
