#!/usr/bin/env python3
"""
rcp: range closest-pair index and experiments

Usage:
    rcp gen uniform --n 4096 --seed 1 --out points.txt
    rcp verify points.txt --random 1000 --seed 3
"""

import logging
import sys
from typing import Optional, Sequence

import colorlog
from pydantic import ValidationError

from cli.parser import build_parser
from config import Config
from exceptions import (
    AnalysisParameterError,
    CornerOverflowError,
    GeneralPositionError,
    GeometryError,
    PointsFileError,
)

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2

INPUT_ERRORS = (
    PointsFileError,
    GeneralPositionError,
    GeometryError,
    AnalysisParameterError,
    ValidationError,
    ValueError,
    OSError,
)


def setup_logging(level: Optional[str] = None) -> None:
    """Configure colored logging on stderr"""
    handler = colorlog.StreamHandler(sys.stderr)
    handler.setFormatter(colorlog.ColoredFormatter(
        '%(log_color)s%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        log_colors={
            'DEBUG': 'cyan',
            'INFO': 'green',
            'WARNING': 'yellow',
            'ERROR': 'red',
            'CRITICAL': 'red,bg_white',
        },
    ))
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(level or Config.LOG_LEVEL)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main command-line entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    try:
        Config.validate_config()
        return args.handler(args)
    except CornerOverflowError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_FAILURE
    except INPUT_ERRORS as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
