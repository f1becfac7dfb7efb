import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_lcp, naive_suffix_array
from lrstab.suffix import (
    SuffixStructures,
    build_lcp_array,
    build_rank_array,
    build_suffix_array,
)


def test_mississippi_table():
    ss = SuffixStructures.build("mississippi")
    assert ss.sa.tolist() == [11, 8, 5, 2, 1, 10, 9, 7, 4, 6, 3]
    assert ss.rank.tolist() == [5, 4, 11, 9, 3, 10, 8, 2, 7, 6, 1]
    assert ss.lcp.tolist() == [0, 1, 1, 4, 0, 0, 1, 0, 2, 1, 3, 0]


def test_banana():
    # expected values from naive_suffix_array / naive_lcp
    assert build_suffix_array("banana").tolist() == [6, 4, 2, 1, 5, 3]
    assert SuffixStructures.build("banana").lcp.tolist() == [0, 1, 3, 0, 0, 2, 0]
    assert naive_suffix_array("banana") == [6, 4, 2, 1, 5, 3]
    assert naive_lcp("banana", [6, 4, 2, 1, 5, 3]) == [0, 1, 3, 0, 0, 2, 0]


def test_single_character():
    ss = SuffixStructures.build("a")
    assert ss.sa.tolist() == [1]
    assert ss.rank.tolist() == [1]
    assert ss.lcp.tolist() == [0, 0]


@pytest.mark.parametrize("sa,rank", [([1], [1]), ([2, 1], [2, 1]), ([3, 1, 2], [2, 3, 1])])
def test_rank_is_inverse(sa, rank):
    assert build_rank_array(sa).tolist() == rank


@pytest.mark.parametrize("s", ["aaaaaaaaaa", "abababab", "zyxwvu", "abcabcabcab", "\x00\xff\x00\xff"])
def test_degenerate_inputs_match_naive(s):
    ss = SuffixStructures.build(s)
    expected = naive_suffix_array(s)
    assert ss.sa.tolist() == expected
    assert ss.lcp.tolist() == naive_lcp(s, expected)


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="ab", min_size=1, max_size=64) | st.text(alphabet="acgt", min_size=1, max_size=64))
def test_matches_naive_construction(s):
    ss = SuffixStructures.build(s)
    sa = naive_suffix_array(s)
    assert ss.sa.tolist() == sa
    assert ss.lcp.tolist() == naive_lcp(s, sa)
    n = len(s)
    assert (ss.rank[ss.sa - 1] == np.arange(1, n + 1)).all()
    assert (ss.sa[ss.rank - 1] == np.arange(1, n + 1)).all()
    for i in range(2, n + 1):
        assert 0 <= ss.lcp[i - 1] <= n - max(ss.sa[i - 2], ss.sa[i - 1]) + 1


def test_full_byte_alphabet_random():
    rng = np.random.default_rng(7)
    data = rng.integers(0, 256, 3000, dtype=np.uint8).tobytes() * 3
    sa = build_suffix_array(data)
    assert sa.tolist() == sorted(range(1, len(data) + 1), key=lambda i: data[i - 1:])
    rank = build_rank_array(sa)
    lcp = build_lcp_array(data, sa, rank)
    assert lcp[0] == 0 and lcp[-1] == 0
    for k in range(1, len(data), 97):
        a, b = data[sa[k - 1] - 1:], data[sa[k] - 1:]
        h = 0
        while h < min(len(a), len(b)) and a[h] == b[h]:
            h += 1
        assert lcp[k] == h
