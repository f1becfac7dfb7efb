"""Left-bounded longest repeats and the staircase array of the useful ones.

``llr_i`` is the longest repeat starting at position ``i``; its length is
``max(lcp[rank[i]], lcp[rank[i] + 1])``.  An LLR is useful when its span is
not contained in another LLR's span.  The useful LLRs, in ascending start
order, are strictly increasing in both start and end.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

import numpy as np


class LlrEntry(NamedTuple):
    start: int
    end: int

    @property
    def weight(self) -> int:
        return self.end - self.start + 1


def llr_at(i: int, rank, lcp) -> Optional[LlrEntry]:
    """The LLR starting at position ``i`` (1-based), or None for a singleton."""
    n = len(rank)
    if not 1 <= i <= n:
        raise IndexError(f"position {i} outside 1..{n}")
    r = int(rank[i - 1])
    length = max(int(lcp[r - 1]), int(lcp[r]))
    if length == 0:
        return None
    return LlrEntry(i, i + length - 1)


def llr_lengths(rank, lcp) -> np.ndarray:
    """|llr_i| for every i (0 where llr_i does not exist), 0-based layout."""
    rank = np.asarray(rank, dtype=np.int64)
    lcp = np.asarray(lcp, dtype=np.int64)
    return np.maximum(lcp[rank - 1], lcp[rank])


@dataclass(frozen=True)
class LlrcArray:
    """Useful LLRs as parallel ``starts``/``ends`` arrays (1-based values).

    Entry indices are 1-based as well: ``entry(1)`` is the first useful LLR.
    """

    starts: np.ndarray
    ends: np.ndarray

    @classmethod
    def from_pairs(cls, pairs) -> "LlrcArray":
        pairs = list(pairs)
        starts = np.array([p[0] for p in pairs], dtype=np.int64)
        ends = np.array([p[1] for p in pairs], dtype=np.int64)
        return cls(starts, ends)

    @property
    def size(self) -> int:
        return int(self.starts.shape[0])

    def __len__(self) -> int:
        return self.size

    @property
    def weights(self) -> np.ndarray:
        return self.ends - self.starts + 1

    def entry(self, k: int) -> LlrEntry:
        return LlrEntry(int(self.starts[k - 1]), int(self.ends[k - 1]))

    def __iter__(self) -> Iterator[LlrEntry]:
        for s, e in zip(self.starts.tolist(), self.ends.tolist()):
            yield LlrEntry(s, e)

    @property
    def entries(self) -> list[LlrEntry]:
        return list(self)

    @property
    def nbytes(self) -> int:
        return self.starts.nbytes + self.ends.nbytes

    def is_staircase(self) -> bool:
        return bool(np.all(np.diff(self.starts) > 0) and np.all(np.diff(self.ends) > 0))


def build_llrc(rank, lcp) -> LlrcArray:
    """Keep ``llr_i`` iff ``L_i > 0`` and ``L_i >= L_{i-1}`` (with ``L_0 = 1``)."""
    lengths = llr_lengths(rank, lcp)
    if lengths.shape[0] == 0:
        return LlrcArray(np.empty(0, np.int64), np.empty(0, np.int64))
    prev = np.empty_like(lengths)
    prev[0] = 1
    prev[1:] = lengths[:-1]
    keep = np.flatnonzero((lengths > 0) & (lengths >= prev))
    starts = keep + 1
    return LlrcArray(starts, starts + lengths[keep] - 1)
