"""
Static range-minimum queries with constant-time lookups.

The default realization is the Fischer-Heun block decomposition: the array is
cut into blocks of about log2(m)/4 elements, every block is classified by the
shape of its Cartesian tree, in-block answers come from one lookup table per
shape, and a sparse table over the block minima handles whole blocks. Space
and preprocessing are linear in the array length.

The sparse-table realization (O(m log m) words) is kept behind
``RmqMethod.SPARSE``; it is also what the block variant uses over block minima.

Ties resolve to the leftmost position.
"""

import math
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import numpy as np

from exceptions import RmqRangeError


class RmqMethod(str, Enum):
    BLOCK = "block"
    SPARSE = "sparse"


class _SparseTable:
    """levels[k][i] = leftmost argmin of values[i : i + 2**k]"""

    def __init__(self, values: np.ndarray):
        m = len(values)
        self.values = values.tolist()
        self.levels: List[List[int]] = []
        if m == 0:
            return

        current = np.arange(m, dtype=np.int64)
        self.levels.append(current.tolist())
        span = 1
        while 2 * span <= m:
            left = current[: m - 2 * span + 1]
            right = current[span: span + len(left)]
            current = np.where(values[right] < values[left], right, left)
            self.levels.append(current.tolist())
            span *= 2

    def query(self, i: int, j: int) -> int:
        k = (j - i + 1).bit_length() - 1
        level = self.levels[k]
        a = level[i]
        b = level[j - (1 << k) + 1]
        return b if self.values[b] < self.values[a] else a

    def entry_count(self) -> int:
        return len(self.values) + sum(len(level) for level in self.levels)


def _block_signature(block: Sequence[float]) -> int:
    """Encode the Cartesian-tree shape of a block as push/pop bits"""
    signature = 1  # leading sentinel bit keeps leading zeros significant
    stack: List[float] = []
    for value in block:
        # strict comparison keeps the leftmost of equal values as the ancestor
        while stack and stack[-1] > value:
            stack.pop()
            signature <<= 1
        stack.append(value)
        signature = (signature << 1) | 1
    return signature


def _in_block_table(block: Sequence[float]) -> List[List[int]]:
    """table[a][b] = leftmost argmin offset of block[a..b]"""
    size = len(block)
    table = [[0] * size for _ in range(size)]
    for a in range(size):
        best = a
        row = table[a]
        for b in range(a, size):
            if block[b] < block[best]:
                best = b
            row[b] = best
    return table


class _BlockRmq:
    def __init__(self, values: np.ndarray):
        m = len(values)
        self.values = values.tolist()
        self.block_size = max(2, math.ceil(math.log2(m) / 4)) if m > 1 else 2
        b = self.block_size

        self.tables: Dict[Tuple[int, int], List[List[int]]] = {}
        self.block_keys: List[Tuple[int, int]] = []
        self.block_min_pos: List[int] = []
        for start in range(0, m, b):
            block = self.values[start: start + b]
            key = (len(block), _block_signature(block))
            table = self.tables.get(key)
            if table is None:
                table = _in_block_table(block)
                self.tables[key] = table
            self.block_keys.append(key)
            self.block_min_pos.append(start + table[0][len(block) - 1])

        block_minima = np.asarray([self.values[p] for p in self.block_min_pos], dtype=np.float64)
        self.summary = _SparseTable(block_minima)

    def query(self, i: int, j: int) -> int:
        b = self.block_size
        bi, bj = i // b, j // b
        if bi == bj:
            start = bi * b
            return start + self.tables[self.block_keys[bi]][i - start][j - start]

        values = self.values
        start = bi * b
        left_len = self.block_keys[bi][0]
        best = start + self.tables[self.block_keys[bi]][i - start][left_len - 1]
        if bj - bi > 1:
            middle = self.block_min_pos[self.summary.query(bi + 1, bj - 1)]
            if values[middle] < values[best]:
                best = middle
        start = bj * b
        right = start + self.tables[self.block_keys[bj]][0][j - start]
        if values[right] < values[best]:
            best = right
        return best

    def entry_count(self) -> int:
        tables = sum(key[0] * key[0] for key in self.tables)
        return (len(self.values) + len(self.block_keys) + len(self.block_min_pos)
                + self.summary.entry_count() + tables)


class RmqIndex:
    """
    Immutable range-minimum index over a sequence of weights

    query(i, j) returns the position of the minimum in values[i..j]
    (inclusive), the leftmost one on ties.
    """

    def __init__(self, values: Sequence[float], method: RmqMethod = RmqMethod.BLOCK):
        array = np.asarray(values, dtype=np.float64)
        self.method = RmqMethod(method)
        if self.method is RmqMethod.BLOCK:
            self._impl = _BlockRmq(array)
        else:
            self._impl = _SparseTable(array)

    @classmethod
    def build(cls, values: Sequence[float], method: RmqMethod = RmqMethod.BLOCK) -> "RmqIndex":
        return cls(values, method)

    @property
    def values(self) -> List[float]:
        return self._impl.values

    def __len__(self) -> int:
        return len(self._impl.values)

    def query(self, i: int, j: int) -> int:
        """
        Position of the minimum in values[i..j]

        Args:
            i: First position, inclusive
            j: Last position, inclusive

        Returns:
            Leftmost position holding the minimum
        """
        if not 0 <= i <= j < len(self.values):
            raise RmqRangeError(f"range [{i}, {j}] outside sequence of length {len(self.values)}")
        return self._impl.query(i, j)

    def entry_count(self) -> int:
        """Stored words, including the copy of the values"""
        return self._impl.entry_count()
