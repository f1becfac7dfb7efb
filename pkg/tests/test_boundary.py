from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIG1_LLRC
from lrstab.boundary import build_boundaries
from lrstab.llr import LlrcArray, build_llrc
from lrstab.suffix import SuffixStructures


def by_definition(llrc, n):
    entries = llrc.entries
    left, right = [], []
    for y in range(1, n + 1):
        hits = [k for k, e in enumerate(entries, 1) if e.end >= y]
        left.append(min(hits) if hits else -1)
    for x in range(1, n + 1):
        hits = [k for k, e in enumerate(entries, 1) if e.start <= x]
        right.append(max(hits) if hits else -1)
    return left, right


def test_fig1_table():
    b = build_boundaries(LlrcArray.from_pairs(FIG1_LLRC), 17)
    assert b.L.tolist() == [1, 1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 5, 5, 5]
    assert b.R.tolist() == [1, 1, 1, 1, 2, 2, 3, 3, 3, 4, 5, 5, 5, 5, 5, 5, 5]
    assert b.candidate_range(11, 12) == (3, 5)
    assert b.candidate_range(6, 12) is None


def test_empty_llrc():
    b = build_boundaries(LlrcArray.from_pairs([]), 4)
    assert b.L.tolist() == [-1] * 4
    assert b.R.tolist() == [-1] * 4


def test_mississippi():
    llrc = LlrcArray.from_pairs([(2, 5), (5, 8), (9, 9), (10, 10), (11, 11)])
    b = build_boundaries(llrc, 11)
    expected = by_definition(llrc, 11)
    assert b.L.tolist() == expected[0] == [1, 1, 1, 1, 1, 2, 2, 2, 3, 4, 5]
    assert b.R.tolist() == expected[1] == [-1, 1, 1, 1, 2, 2, 2, 2, 3, 4, 5]


def test_trailing_singleton_leaves_minus_one():
    # "aab": llrc = [(1,1),(2,2)]; position 3 has no LLR ending at or after it
    ss = SuffixStructures.build("aab")
    llrc = build_llrc(ss.rank, ss.lcp)
    b = build_boundaries(llrc, 3)
    assert (b.L.tolist(), b.R.tolist()) == by_definition(llrc, 3)
    assert b.L.tolist()[-1] == -1


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="abc", min_size=1, max_size=50))
def test_sweep_equals_definition(s):
    ss = SuffixStructures.build(s)
    llrc = build_llrc(ss.rank, ss.lcp)
    n = len(s)
    b = build_boundaries(llrc, n)
    assert (b.L.tolist(), b.R.tolist()) == by_definition(llrc, n)
    entries = llrc.entries
    for x in range(1, n + 1):
        for y in range(x, n + 1):
            rng = b.candidate_range(x, y)
            inside = {k for k, e in enumerate(entries, 1) if e.start <= x and e.end >= y}
            assert inside == (set(range(rng[0], rng[1] + 1)) if rng else set())
