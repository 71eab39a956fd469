"""
Static search structures: RMQ, range trees, anchored squares, kd-tree and Yao graph.
"""

from .rmq import RmqIndex, RmqMethod
from .range_tree import RangeTree, CanonicalRange, WeightedEntry
from .anchored_square import AnchoredSquareIndex, AnchoredSquareResult, ConeTree
from .kdtree import KdTree
from .yao import YaoGraph, YaoEdge, YaoMethod, WeightedPoint, yao_build, yao_weighted_sets

__all__ = [
    'RmqIndex',
    'RmqMethod',
    'RangeTree',
    'CanonicalRange',
    'WeightedEntry',
    'AnchoredSquareIndex',
    'AnchoredSquareResult',
    'ConeTree',
    'KdTree',
    'YaoGraph',
    'YaoEdge',
    'YaoMethod',
    'WeightedPoint',
    'yao_build',
    'yao_weighted_sets',
]
