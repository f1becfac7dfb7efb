"""Per-coordinate LLRc index ranges.

``L[y]`` is the first LLRc index whose end is ``>= y`` and ``R[x]`` the last
index whose start is ``<= x`` (both 1-based, ``-1`` when no such index
exists).  The candidates for a query ``[x..y]`` are then exactly
``llrc[L[y] .. R[x]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numba
import numpy as np

from .llr import LlrcArray


@numba.njit(cache=True)
def _sweep(starts, ends, n):
    size = starts.shape[0]
    left = np.full(n, -1, dtype=np.int64)
    right = np.full(n, -1, dtype=np.int64)
    if size == 0:
        return left, right
    i = 1
    for y in range(1, n + 1):
        if y <= ends[i - 1]:
            left[y - 1] = i
        elif i < size:
            i += 1
            left[y - 1] = i
        else:
            break
    i = size
    for x in range(n, 0, -1):
        if x >= starts[i - 1]:
            right[x - 1] = i
        elif i > 1:
            i -= 1
            right[x - 1] = i
        else:
            break
    return left, right


@dataclass(frozen=True)
class Boundaries:
    L: np.ndarray
    R: np.ndarray

    @property
    def n(self) -> int:
        return int(self.L.shape[0])

    @property
    def nbytes(self) -> int:
        return self.L.nbytes + self.R.nbytes

    def candidate_range(self, x: int, y: int) -> Optional[tuple[int, int]]:
        """The LLRc index range realising the dominance set of ``(x, y)``."""
        lo = int(self.L[y - 1])
        hi = int(self.R[x - 1])
        if lo != -1 and hi != -1 and lo <= hi:
            return lo, hi
        return None


def build_boundaries(llrc: LlrcArray, n: int) -> Boundaries:
    left, right = _sweep(llrc.starts, llrc.ends, n)
    return Boundaries(left, right)
