"""Suffix array, rank array and lcp array.

The suffix array is built with induced sorting (SA-IS); the recursion on the
reduced LMS string is driven from Python while every linear pass runs in a
numba kernel.  The lcp array uses Kasai's algorithm.

Arrays are returned as ``int64`` numpy arrays holding 1-based values, laid
out so that element ``k`` (0-based) stores entry ``k + 1`` of the 1-based
array.  ``lcp`` has ``n + 1`` entries with ``lcp[1] = lcp[n+1] = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .text import Text, as_text

_INT = np.int64


@numba.njit(cache=True)
def _classify(s, upper):
    n = s.shape[0]
    # True for S-type; the last suffix is L-type.
    ls = np.zeros(n, dtype=np.bool_)
    for i in range(n - 2, -1, -1):
        if s[i] == s[i + 1]:
            ls[i] = ls[i + 1]
        else:
            ls[i] = s[i] < s[i + 1]
    sum_l = np.zeros(upper + 1, dtype=np.int64)
    sum_s = np.zeros(upper + 1, dtype=np.int64)
    for i in range(n):
        if not ls[i]:
            sum_s[s[i]] += 1
        else:
            sum_l[s[i] + 1] += 1
    for c in range(upper + 1):
        sum_s[c] += sum_l[c]
        if c < upper:
            sum_l[c + 1] += sum_s[c]
    return ls, sum_l, sum_s


@numba.njit(cache=True)
def _induce(s, ls, sum_l, sum_s, lms, sa):
    n = s.shape[0]
    sa[:] = -1
    buf = sum_s.copy()
    for d in lms:
        if d == n:
            continue
        sa[buf[s[d]]] = d
        buf[s[d]] += 1
    buf[:] = sum_l
    sa[buf[s[n - 1]]] = n - 1
    buf[s[n - 1]] += 1
    for i in range(n):
        v = sa[i]
        if v >= 1 and not ls[v - 1]:
            sa[buf[s[v - 1]]] = v - 1
            buf[s[v - 1]] += 1
    buf[:] = sum_l
    for i in range(n - 1, -1, -1):
        v = sa[i]
        if v >= 1 and ls[v - 1]:
            buf[s[v - 1] + 1] -= 1
            sa[buf[s[v - 1] + 1]] = v - 1


@numba.njit(cache=True)
def _lms(ls):
    n = ls.shape[0]
    lms_map = np.full(n + 1, -1, dtype=np.int64)
    m = 0
    for i in range(1, n):
        if not ls[i - 1] and ls[i]:
            lms_map[i] = m
            m += 1
    lms = np.empty(m, dtype=np.int64)
    m = 0
    for i in range(1, n):
        if not ls[i - 1] and ls[i]:
            lms[m] = i
            m += 1
    return lms_map, lms


@numba.njit(cache=True)
def _reduce(s, sa, lms_map, lms):
    """Name the sorted LMS substrings; returns the reduced string and its max symbol."""
    n = s.shape[0]
    m = lms.shape[0]
    sorted_lms = np.empty(m, dtype=np.int64)
    k = 0
    for v in sa:
        if lms_map[v] != -1:
            sorted_lms[k] = v
            k += 1
    rec = np.zeros(m, dtype=np.int64)
    upper = 0
    rec[lms_map[sorted_lms[0]]] = 0
    for i in range(1, m):
        left = sorted_lms[i - 1]
        right = sorted_lms[i]
        end_l = lms[lms_map[left] + 1] if lms_map[left] + 1 < m else n
        end_r = lms[lms_map[right] + 1] if lms_map[right] + 1 < m else n
        same = True
        if end_l - left != end_r - right:
            same = False
        else:
            while left < end_l:
                if s[left] != s[right]:
                    break
                left += 1
                right += 1
            if left == n or s[left] != s[right]:
                same = False
        if not same:
            upper += 1
        rec[lms_map[sorted_lms[i]]] = upper
    return rec, upper


def _sais(s: np.ndarray, upper: int) -> np.ndarray:
    n = s.shape[0]
    if n == 0:
        return np.empty(0, dtype=_INT)
    if n == 1:
        return np.zeros(1, dtype=_INT)
    if n == 2:
        return np.array([0, 1] if s[0] < s[1] else [1, 0], dtype=_INT)
    ls, sum_l, sum_s = _classify(s, upper)
    lms_map, lms = _lms(ls)
    sa = np.empty(n, dtype=_INT)
    _induce(s, ls, sum_l, sum_s, lms, sa)
    if lms.shape[0]:
        rec, rec_upper = _reduce(s, sa, lms_map, lms)
        rec_sa = _sais(rec, int(rec_upper))
        _induce(s, ls, sum_l, sum_s, lms[rec_sa], sa)
    return sa


def suffix_array_0(data: bytes) -> np.ndarray:
    """0-based suffix array of ``data``."""
    s = np.frombuffer(data, dtype=np.uint8).astype(_INT)
    return _sais(s, 255)


def build_suffix_array(text: Text | bytes | str) -> np.ndarray:
    """SA[1..n]: starting positions (1-based) of the suffixes in sorted order."""
    return suffix_array_0(as_text(text).data) + 1


def build_rank_array(sa) -> np.ndarray:
    """Inverse permutation of ``sa``: ``rank[sa[j]] = j``."""
    sa = np.asarray(sa, dtype=_INT)
    rank = np.empty_like(sa)
    rank[sa - 1] = np.arange(1, sa.shape[0] + 1, dtype=_INT)
    return rank


@numba.njit(cache=True)
def _kasai(s, sa, rank):
    # sa/rank are 1-based values; out[k] (0-based) is lcp[k + 1].
    n = s.shape[0]
    out = np.zeros(n + 1, dtype=np.int64)
    h = 0
    for i in range(n):
        r = rank[i] - 1
        if r == 0:
            h = 0
            continue
        j = sa[r - 1] - 1
        while i + h < n and j + h < n and s[i + h] == s[j + h]:
            h += 1
        out[r] = h
        if h > 0:
            h -= 1
    return out


def build_lcp_array(text: Text | bytes | str, sa, rank) -> np.ndarray:
    """lcp[1..n+1] with zero sentinels at both ends."""
    s = np.frombuffer(as_text(text).data, dtype=np.uint8)
    return _kasai(s, np.asarray(sa, dtype=_INT), np.asarray(rank, dtype=_INT))


@dataclass(frozen=True)
class SuffixStructures:
    sa: np.ndarray
    rank: np.ndarray
    lcp: np.ndarray

    @classmethod
    def build(cls, text: Text | bytes | str) -> "SuffixStructures":
        text = as_text(text)
        sa = build_suffix_array(text)
        rank = build_rank_array(sa)
        return cls(sa, rank, build_lcp_array(text, sa, rank))

    @property
    def n(self) -> int:
        return int(self.sa.shape[0])

    @property
    def nbytes(self) -> int:
        return self.sa.nbytes + self.rank.nbytes + self.lcp.nbytes
