"""
Geometric primitives, query-rectangle regions and exact closest pair.
"""

from .primitives import (
    Point,
    Rect,
    Quadrant,
    Orientation,
    distance,
    quadrant_contains,
    packing_threshold,
    pair_key,
    check_general_position,
)
from .regions import RegionSet, compute_regions
from .closest_pair import PairResult, NO_PAIR, closest_pair_fast, closest_pair_brute

__all__ = [
    'Point',
    'Rect',
    'Quadrant',
    'Orientation',
    'distance',
    'quadrant_contains',
    'packing_threshold',
    'pair_key',
    'check_general_position',
    'RegionSet',
    'compute_regions',
    'PairResult',
    'NO_PAIR',
    'closest_pair_fast',
    'closest_pair_brute',
]
