import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIG1, FIG1_LLRC, MISSISSIPPI
from lrstab.llr import LlrcArray, LlrEntry, build_llrc, llr_at
from lrstab.oracle import Oracle


def llrc_of(s, structures):
    ss = structures(s)
    return build_llrc(ss.rank, ss.lcp)


def test_llr_at_ababab(structures):
    ss = structures("ababab")
    assert llr_at(3, ss.rank, ss.lcp) == (3, 6)
    assert llr_at(4, ss.rank, ss.lcp) == (4, 6)
    assert llr_at(4, ss.rank, ss.lcp).weight == 3


def test_llr_at_mississippi(structures):
    ss = structures(MISSISSIPPI)
    assert llr_at(1, ss.rank, ss.lcp) is None
    assert llr_at(2, ss.rank, ss.lcp) == LlrEntry(2, 5)


def test_llr_at_out_of_range(structures):
    ss = structures(MISSISSIPPI)
    with pytest.raises(IndexError):
        llr_at(0, ss.rank, ss.lcp)


def test_fig1_llrc(structures):
    assert llrc_of(FIG1, structures).entries == FIG1_LLRC


def test_mississippi_llrc(structures):
    assert llrc_of(MISSISSIPPI, structures).entries == [(2, 5), (5, 8), (9, 9), (10, 10), (11, 11)]


def test_all_distinct_is_empty(structures):
    llrc = llrc_of("abcd", structures)
    assert llrc.size == 0
    assert llrc.entries == []


def test_llrc_array_helpers():
    llrc = LlrcArray.from_pairs(FIG1_LLRC)
    assert llrc.size == 5
    assert llrc.weights.tolist() == [5, 4, 7, 5, 7]
    assert llrc.entry(3) == (7, 13)
    assert llrc.is_staircase()
    assert not LlrcArray.from_pairs([(1, 5), (2, 5)]).is_staircase()


def maximal_repeat_spans(s):
    """Repeat spans not contained in another repeat span (oracle only)."""
    spans = Oracle(s).repeat_spans()
    return sorted(
        (i, j) for i, j in spans
        if not any(a <= i and j <= b and (a, b) != (i, j) for a, b in spans)
    )


strings = st.text(alphabet="ab", min_size=1, max_size=40) | st.text(alphabet="abcd", min_size=1, max_size=40)


@settings(max_examples=200, deadline=None)
@given(strings)
def test_llr_properties(s):
    from lrstab.suffix import SuffixStructures

    ss = SuffixStructures.build(s)
    oracle = Oracle(s)
    n = len(s)
    llrs = [llr_at(i, ss.rank, ss.lcp) for i in range(1, n + 1)]
    for i, entry in enumerate(llrs, 1):
        if entry is None:
            assert s.count(s[i - 1]) == 1
            continue
        assert oracle.is_repeat(entry.start, entry.end)
        assert entry.end == n or not oracle.is_repeat(entry.start, entry.end + 1)
    for a, b in zip(llrs, llrs[1:]):
        if a is not None and b is not None:
            assert a.weight <= b.weight + 1
            assert a.end <= b.end
    llrc = build_llrc(ss.rank, ss.lcp)
    assert llrc.is_staircase()
    assert llrc.entries == maximal_repeat_spans(s)
