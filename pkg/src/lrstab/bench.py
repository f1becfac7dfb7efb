"""Timing harness: build-phase breakdown, structure footprint, query cost."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

import numpy as np

from .answer import check_interval
from .index import StabbingIndex
from .scan import scan_all_lr, scan_leftmost_lr
from .suffix import SuffixStructures
from .text import Text, as_text

MODES = ("one", "all")
BENCH_ENGINES = ("rmq", "dmq", "scan")
MB = 1 << 20


@dataclass
class BenchConfig:
    query_count: int = 100_000
    delta: int = 1
    mode: str = "one"
    engine: str = "rmq"
    seed: int = 0
    sweep: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.engine not in BENCH_ENGINES:
            raise ValueError(f"engine must be one of {BENCH_ENGINES}")
        if self.delta < 1:
            raise ValueError("delta must be >= 1")


@dataclass
class BenchReport:
    name: str
    n: int
    engine: str
    mode: str
    delta: int
    queries: int
    llrc_size: int
    build_suffix_s: float
    build_llrc_s: float
    build_boundaries_s: float
    build_range_max_s: float
    build_total_s: float
    memory_bytes: int
    query_total_s: float
    query_mean_us: float
    occ_total: int

    def as_row(self) -> dict:
        return asdict(self)


COLUMNS = list(BenchReport.__dataclass_fields__)


def random_text(size: int, alphabet: bytes = b"ACGT", seed: int = 0) -> Text:
    rng = np.random.default_rng(seed)
    symbols = np.frombuffer(alphabet, dtype=np.uint8)
    data = rng.choice(symbols, size).tobytes()
    return Text(data, f"random-{len(alphabet)}-{size}")


def query_starts(n: int, config: BenchConfig) -> list[int]:
    """Left ends of the benchmark intervals (each spans ``delta`` positions)."""
    last = n - config.delta + 1
    check_interval(1, config.delta, n)
    if config.sweep:
        return list(range(1, last + 1))
    rng = np.random.default_rng(config.seed)
    return rng.integers(1, last + 1, size=config.query_count).tolist()


def time_queries(query, starts: list[int], delta: int) -> tuple[float, int]:
    """Run ``query(x, y)`` over every start; returns (seconds, total spans)."""
    span = delta - 1
    occ = 0
    t0 = time.perf_counter()
    for x in starts:
        occ += len(query(x, x + span).spans)
    return time.perf_counter() - t0, occ


def run_bench(text: Text | bytes | str, config: BenchConfig) -> BenchReport:
    text = as_text(text)
    starts = query_starts(text.n, config)
    if config.engine == "scan":
        t0 = time.perf_counter()
        ss = SuffixStructures.build(text)
        build = time.perf_counter() - t0
        phases = (build, 0.0, 0.0, 0.0)
        memory = ss.rank.nbytes + ss.lcp.nbytes
        llrc_size = 0
        fn = scan_leftmost_lr if config.mode == "one" else scan_all_lr
        rank, lcp = ss.rank, ss.lcp

        def query(x, y):
            return fn(x, y, rank, lcp)
    else:
        index = StabbingIndex.build(text)
        tm = index.timings
        phases = (tm.suffix, tm.llrc, tm.boundaries, tm.range_max)
        engine = index.engine(config.engine)
        memory = engine.nbytes
        llrc_size = index.llrc.size
        query = engine.query_one if config.mode == "one" else engine.query_all
    total, occ = time_queries(query, starts, config.delta)
    count = len(starts)
    return BenchReport(
        name=text.source_name, n=text.n, engine=config.engine, mode=config.mode,
        delta=config.delta, queries=count, llrc_size=llrc_size,
        build_suffix_s=phases[0], build_llrc_s=phases[1],
        build_boundaries_s=phases[2], build_range_max_s=phases[3],
        build_total_s=sum(phases), memory_bytes=memory,
        query_total_s=total, query_mean_us=1e6 * total / max(count, 1),
        occ_total=occ,
    )


def format_reports(reports: list[BenchReport]) -> str:
    lines = ["\t".join(COLUMNS)]
    for report in reports:
        row = report.as_row()
        cells = []
        for col in COLUMNS:
            value = row[col]
            cells.append(f"{value:.6g}" if isinstance(value, float) else str(value))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"
