"""
rcp experiment: candidate-pair experiments
"""

import argparse
import logging

from cli.models import ExperimentKind
from config import Config
from services.analysis import (
    del_square_edge,
    quadrant_candidate_report,
    square_candidate_survey,
    verify_lower_bound,
)
from services.datasets import uniform_points
from services.points_io import read_points
from services.reports import ExperimentRow

logger = logging.getLogger(__name__)


def add_parsers(subparsers, common: argparse.ArgumentParser) -> None:
    experiment = subparsers.add_parser("experiment", parents=[common], help="candidate-pair experiments")
    experiment.add_argument("kind", choices=[k.value for k in ExperimentKind])
    experiment.add_argument("--n", type=int, default=64)
    experiment.add_argument("--points", default=None, help="use this points file instead of uniform points")
    experiment.add_argument("--fatness", type=float, default=1.1, help="lower-bound family parameter f")
    experiment.add_argument("--arc", type=float, default=Config.LOWER_BOUND_ARC)
    experiment.add_argument("--trials", type=int, default=Config.SURVEY_TRIALS)
    experiment.set_defaults(handler=run)


def _lower_bound(args: argparse.Namespace) -> ExperimentRow:
    report = verify_lower_bound(args.n, args.fatness, args.arc, args.seed)
    print(f"{report.verified} candidate pairs verified (expected {report.expected})")
    return ExperimentRow(
        experiment=ExperimentKind.LOWER_BOUND.value, n=report.n, pairs=report.cross_pairs,
        checked=report.expected, passed=min(report.verified, report.expected),
        note=f"f={report.fatness:g}",
    )


def _points(args: argparse.Namespace):
    return read_points(args.points) if args.points else uniform_points(args.n, args.seed)


def _square_candidates(args: argparse.Namespace) -> ExperimentRow:
    points = _points(args)
    survey = square_candidate_survey(points, args.trials, args.seed)
    passed = sum(1 for p, q in survey.pairs if del_square_edge(p, q, points, 2))
    if passed == survey.count:
        print(f"{survey.count} pairs; all pairs in Del□(S,2)")
    else:
        print(f"{survey.count - passed} of {survey.count} pairs outside Del□(S,2)")
    return ExperimentRow(
        experiment=ExperimentKind.SQUARE_CANDIDATES.value, n=len(points), pairs=survey.count,
        checked=survey.count, passed=passed, note=f"squares={survey.squares}",
    )


def _quadrant_candidates(args: argparse.Namespace) -> ExperimentRow:
    points = _points(args)
    report = quadrant_candidate_report(points)
    print(f"{report.pairs} quadrant candidate pairs, {report.crossings} crossings")
    for first, second in report.crossing_examples:
        logger.warning(f"Crossing candidate pairs {first} and {second}")
    return ExperimentRow(
        experiment=ExperimentKind.QUADRANT_CANDIDATES.value, n=report.n, pairs=report.pairs,
        checked=report.pairs, passed=report.pairs if not report.crossings else 0,
        note=f"crossings={report.crossings}",
    )


_RUNNERS = {
    ExperimentKind.LOWER_BOUND: _lower_bound,
    ExperimentKind.SQUARE_CANDIDATES: _square_candidates,
    ExperimentKind.QUADRANT_CANDIDATES: _quadrant_candidates,
}


def run(args: argparse.Namespace) -> int:
    row = _RUNNERS[ExperimentKind(args.kind)](args)
    print(ExperimentRow.header())
    print(row.to_tsv())
    return 0 if row.ok else 1
