"""Constant-time stabbing queries via range maximum over LLRc weights.

A query ``[x..y]`` maps through the precomputed boundaries to the LLRc
index range ``[L[y] .. R[x]]``; one range-max over that range gives a
longest repeat.  All ties are then enumerated by splitting the range at each
maximum found, which costs at most ``2 * occ + 1`` range-max calls.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .answer import EMPTY, LrAnswer, QueryStats, check_interval
from .boundary import Boundaries, build_boundaries
from .llr import LlrcArray


class RangeMax:
    """Sparse table answering leftmost-argmax over a fixed integer array.

    ``argmax(l, r)`` takes and returns 1-based indices.  Space is
    O(m log m) indices; queries touch two table cells.
    """

    def __init__(self, values):
        values = np.asarray(values, dtype=np.int64)
        self.values = values
        m = values.shape[0]
        dtype = np.int32 if m < 2**31 else np.int64
        levels = [np.arange(m, dtype=dtype)]
        span = 1
        while 2 * span <= m:
            prev = levels[-1]
            a = prev[: m - 2 * span + 1]
            b = prev[span: span + a.shape[0]]
            levels.append(np.where(values[b] > values[a], b, a).astype(dtype, copy=False))
            span *= 2
        self.levels = levels

    def __len__(self) -> int:
        return int(self.values.shape[0])

    @property
    def nbytes(self) -> int:
        return sum(level.nbytes for level in self.levels)

    def argmax(self, l: int, r: int) -> int:
        k = (r - l + 1).bit_length() - 1
        level = self.levels[k]
        a = int(level[l - 1])
        b = int(level[r - (1 << k)])
        values = self.values
        # a is leftmost when the two halves tie
        return (b if values[b] > values[a] else a) + 1


@dataclass
class RmqIndex:
    llrc: LlrcArray
    boundaries: Boundaries
    rm: RangeMax
    n: int

    @property
    def nbytes(self) -> int:
        return self.llrc.nbytes + self.boundaries.nbytes + self.rm.nbytes

    def query_one(self, x: int, y: int, stats: QueryStats | None = None) -> LrAnswer:
        check_interval(x, y, self.n)
        lo = int(self.boundaries.L[y - 1])
        hi = int(self.boundaries.R[x - 1])
        if lo == -1 or hi == -1 or lo > hi:
            if stats is not None:
                stats.record(0, 0)
            return EMPTY
        m = self.rm.argmax(lo, hi)
        if stats is not None:
            stats.record(1, 1)
        return LrAnswer(((int(self.llrc.starts[m - 1]), int(self.llrc.ends[m - 1])),))

    def query_all(self, x: int, y: int, stats: QueryStats | None = None) -> LrAnswer:
        check_interval(x, y, self.n)
        lo = int(self.boundaries.L[y - 1])
        hi = int(self.boundaries.R[x - 1])
        if lo == -1 or hi == -1 or lo > hi:
            if stats is not None:
                stats.record(0, 0)
            return EMPTY
        argmax = self.rm.argmax
        weights = self.rm.values
        starts = self.llrc.starts
        ends = self.llrc.ends
        m = argmax(lo, hi)
        calls = 1
        weight = int(weights[m - 1])
        found = [m]
        stack = []
        if lo <= m - 1:
            stack.append((lo, m - 1))
        if m + 1 <= hi:
            stack.append((m + 1, hi))
        while stack:
            l, r = stack.pop()
            m = argmax(l, r)
            calls += 1
            if weights[m - 1] < weight:
                continue
            found.append(m)
            if l <= m - 1:
                stack.append((l, m - 1))
            if m + 1 <= r:
                stack.append((m + 1, r))
        found.sort()
        if stats is not None:
            stats.record(calls, len(found))
        return LrAnswer(tuple((int(starts[k - 1]), int(ends[k - 1])) for k in found))


def build_rmq_index(llrc: LlrcArray, boundaries: Boundaries | None, n: int) -> RmqIndex:
    if boundaries is None:
        boundaries = build_boundaries(llrc, n)
    return RmqIndex(llrc, boundaries, RangeMax(llrc.weights), n)


def query_one(idx: RmqIndex, x: int, y: int) -> LrAnswer:
    return idx.query_one(x, y)


def query_all(idx: RmqIndex, x: int, y: int) -> LrAnswer:
    return idx.query_all(x, y)
