"""Index-free queries that walk the LLRs leftwards from ``x``.

Both functions need only the rank and lcp arrays and run in O(x) time.  The
walk stops at the first ``llr_i`` that is absent or does not reach ``y``:
no LLR further left can cover the interval once that happens.
"""

from __future__ import annotations

from .answer import EMPTY, LrAnswer, check_interval


def _covering_lengths(x: int, y: int, rank, lcp):
    """Yield ``(i, |llr_i|)`` for i = x, x-1, ... while llr_i covers [x..y]."""
    for i in range(x, 0, -1):
        r = int(rank[i - 1])
        a = int(lcp[r - 1])
        b = int(lcp[r])
        length = a if a > b else b
        if length == 0 or i + length - 1 < y:
            break
        yield i, length


def scan_leftmost_lr(x: int, y: int, rank, lcp) -> LrAnswer:
    check_interval(x, y, len(rank))
    start, end = -1, -1
    for i, length in _covering_lengths(x, y, rank, lcp):
        # >= moves the pick leftwards on ties
        if length >= end - start + 1:
            start, end = i, i + length - 1
    if start == -1:
        return EMPTY
    return LrAnswer(((start, end),))


def scan_all_lr(x: int, y: int, rank, lcp) -> LrAnswer:
    check_interval(x, y, len(rank))
    best = 0
    for _, length in _covering_lengths(x, y, rank, lcp):
        if length > best:
            best = length
    if best == 0:
        return EMPTY
    spans = [(i, i + best - 1) for i, length in _covering_lengths(x, y, rank, lcp)
             if length == best]
    spans.reverse()
    return LrAnswer(tuple(spans))
