import random

import pytest

from lrstab.suffix import SuffixStructures

FIG1 = "aaababaabaaabaaab"
FIG1_LLRC = [(1, 5), (5, 8), (7, 13), (10, 14), (11, 17)]
MISSISSIPPI = "mississippi"

ACCEPTANCE_LINES = []


def random_strings(count, alphabet, max_n, seed):
    rng = random.Random(seed)
    return ["".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_n)))
            for _ in range(count)]


def naive_suffix_array(s):
    return sorted(range(1, len(s) + 1), key=lambda i: s[i - 1:])


def naive_lcp(s, sa):
    def common(a, b):
        k = 0
        while k < len(a) and k < len(b) and a[k] == b[k]:
            k += 1
        return k

    return [0] + [common(s[sa[k - 1] - 1:], s[sa[k] - 1:]) for k in range(1, len(sa))] + [0]


@pytest.fixture(scope="session")
def structures():
    cache = {}

    def get(s):
        if s not in cache:
            cache[s] = SuffixStructures.build(s)
        return cache[s]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
