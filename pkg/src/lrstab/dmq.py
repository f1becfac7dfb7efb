"""Stabbing queries as 2d dominance-max queries over the LLRc dots.

Each useful LLR is a dot ``(start, end)`` weighted by its length.  The
answer for ``[x..y]`` is the heaviest dot with ``start <= x`` and
``end >= y``.  Since the dots form a strict staircase, the dominance region
is a contiguous run of dots found by two binary searches, followed by one
range-max: O(log n) per dominance query with linear extra space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .answer import EMPTY, LrAnswer, QueryStats, check_interval
from .llr import LlrcArray, LlrEntry
from .rmq import RangeMax


@dataclass
class DmqIndex:
    dots: LlrcArray
    rm: RangeMax
    n: int

    @property
    def nbytes(self) -> int:
        return self.dots.nbytes + self.rm.nbytes

    def dominance_max(self, x: int, y: int) -> Optional[LlrEntry]:
        """Heaviest dot with start <= x and end >= y (leftmost on ties)."""
        lo = int(np.searchsorted(self.dots.ends, y, side="left")) + 1
        hi = int(np.searchsorted(self.dots.starts, x, side="right"))
        if lo > hi:
            return None
        m = self.rm.argmax(lo, hi)
        return LlrEntry(int(self.dots.starts[m - 1]), int(self.dots.ends[m - 1]))

    def query_one(self, x: int, y: int, stats: QueryStats | None = None) -> LrAnswer:
        check_interval(x, y, self.n)
        dot = self.dominance_max(x, y)
        if stats is not None:
            stats.record(1, 0 if dot is None else 1)
        if dot is None:
            return EMPTY
        return LrAnswer((tuple(dot),))

    def query_all(self, x: int, y: int, stats: QueryStats | None = None) -> LrAnswer:
        check_interval(x, y, self.n)
        n = self.n
        first = self.dominance_max(x, y)
        calls = 1
        if first is None:
            if stats is not None:
                stats.record(calls, 0)
            return EMPTY
        weight = first.weight
        found = [first]
        stack = [(first, x, y)]
        while stack:
            dot, qx, qy = stack.pop()
            # dots left of this one, then dots above it
            for nx, ny in ((dot.start - 1, qy), (qx, dot.end + 1)):
                if nx < 1 or ny > n:
                    continue
                hit = self.dominance_max(nx, ny)
                calls += 1
                if hit is None or hit.weight < weight:
                    continue
                found.append(hit)
                stack.append((hit, nx, ny))
        if stats is not None:
            stats.record(calls, len(found))
        return LrAnswer.from_spans(found)


def build_dmq_index(llrc: LlrcArray, n: int, rm: RangeMax | None = None) -> DmqIndex:
    return DmqIndex(llrc, rm if rm is not None else RangeMax(llrc.weights), n)


def dominance_max(idx: DmqIndex, x: int, y: int) -> Optional[LlrEntry]:
    return idx.dominance_max(x, y)


def query_one_2d(idx: DmqIndex, x: int, y: int) -> LrAnswer:
    return idx.query_one(x, y)


def query_all_2d(idx: DmqIndex, x: int, y: int) -> LrAnswer:
    return idx.query_all(x, y)
