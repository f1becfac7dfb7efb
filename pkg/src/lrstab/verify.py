"""Cross-check every query engine against the brute-force oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .answer import LrAnswer, QueryStats
from .index import StabbingIndex
from .llr import llr_at
from .oracle import DEFAULT_CONFIG, Oracle, OracleConfig
from .scan import scan_all_lr, scan_leftmost_lr
from .suffix import SuffixStructures
from .text import Text, as_text

MAX_SPAN = 10


def all_intervals(n: int, max_span: int = MAX_SPAN) -> Iterable[tuple[int, int]]:
    """Every ``[x..y]`` with ``y - x + 1 <= max_span`` (point queries included)."""
    for x in range(1, n + 1):
        for y in range(x, min(n, x + max_span - 1) + 1):
            yield x, y


def sample_intervals(n: int, count: int, seed: int = 0,
                     max_span: int = MAX_SPAN) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        x = rng.randint(1, n)
        out.append((x, min(n, x + rng.randint(0, max_span - 1))))
    return out


@dataclass
class Mismatch:
    x: int
    y: int
    results: dict[str, LrAnswer]

    def describe(self) -> str:
        parts = [f"interval [{self.x}..{self.y}]:"]
        for name, answer in self.results.items():
            parts.append(f"  {name}: {list(answer.spans)}")
        return "\n".join(parts)


@dataclass
class VerifyReport:
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    invariant_failures: list[str] = field(default_factory=list)
    rmq_stats: QueryStats = field(default_factory=QueryStats)
    dmq_stats: QueryStats = field(default_factory=QueryStats)

    @property
    def ok(self) -> bool:
        return (not self.mismatches and not self.invariant_failures
                and not self.rmq_stats.bound_violations()
                and not self.dmq_stats.bound_violations())

    def merge(self, other: "VerifyReport") -> None:
        self.checked += other.checked
        self.mismatches.extend(other.mismatches)
        self.invariant_failures.extend(other.invariant_failures)
        for mine, theirs in ((self.rmq_stats, other.rmq_stats),
                             (self.dmq_stats, other.dmq_stats)):
            mine.calls += theirs.calls
            mine.queries += theirs.queries
            mine.per_query.extend(theirs.per_query)


def structural_failures(text: Text, ss: SuffixStructures, index: StabbingIndex) -> list[str]:
    """Staircase order of LLRc and the neighbouring-LLR length bound."""
    failures = []
    if not index.llrc.is_staircase():
        failures.append(f"{text.source_name}: LLRc not strictly increasing")
    prev = None
    for i in range(1, text.n + 1):
        cur = llr_at(i, ss.rank, ss.lcp)
        if prev is not None and cur is not None:
            if prev.weight > cur.weight + 1 or prev.end > cur.end:
                failures.append(f"{text.source_name}: llr_{i - 1}={prev} vs llr_{i}={cur}")
        prev = cur
    return failures


def verify_text(text: Text | bytes | str,
                intervals: Optional[Iterable[tuple[int, int]]] = None,
                config: OracleConfig = DEFAULT_CONFIG,
                stop_at_first: bool = True) -> VerifyReport:
    text = as_text(text)
    oracle = Oracle(text, config)
    ss = SuffixStructures.build(text)
    index = StabbingIndex.build(text)
    rmq, dmq = index.rmq, index.dmq
    llrc_set = set(index.llrc)
    report = VerifyReport()
    report.invariant_failures.extend(structural_failures(text, ss, index))
    if intervals is None:
        intervals = all_intervals(text.n)
    for x, y in intervals:
        expected = oracle.brute_lr(x, y)
        results = {
            "oracle": expected,
            "scan_all": scan_all_lr(x, y, ss.rank, ss.lcp),
            "rmq_all": rmq.query_all(x, y, report.rmq_stats),
            "dmq_all": dmq.query_all(x, y, report.dmq_stats),
        }
        leftmost = LrAnswer(expected.spans[:1])
        ones = {
            "scan_one": scan_leftmost_lr(x, y, ss.rank, ss.lcp),
            "rmq_one": rmq.query_one(x, y),
            "dmq_one": dmq.query_one(x, y),
        }
        report.checked += 1
        bad = any(r != expected for r in results.values())
        bad = bad or any(r != leftmost for r in ones.values())
        if bad:
            report.mismatches.append(Mismatch(x, y, {**results, **ones}))
            if stop_at_first:
                break
        for span in results["rmq_all"].spans:
            if span not in llrc_set:
                report.invariant_failures.append(
                    f"{text.source_name}: answer {span} for [{x}..{y}] is not in LLRc")
    return report
