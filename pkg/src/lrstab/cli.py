"""Command-line front end.

    lrstab build TEXT -o INDEX
    lrstab query INDEX X Y [--all] [--engine rmq|dmq]
    lrstab query INDEX --queries FILE [--all] [--workers N]
    lrstab scan TEXT X Y [--all]
    lrstab verify TEXT [--max-n N] [--sample K]
    lrstab bench [TEXT ...] [--random-mb 1,2,4] [--engine ...] [--figure out.png]

Answers print as ``start<TAB>end<TAB>length`` lines, or ``-1<TAB>-1<TAB>0``
when no repeat covers the interval.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .answer import check_interval
from .bench import BENCH_ENGINES, MB, MODES, BenchConfig, format_reports, random_text, run_bench
from .errors import CorruptIndex, InvalidInterval, IoError, LrstabError, TextTooLarge
from .index import ENGINES, StabbingIndex, warm_up
from .oracle import OracleConfig
from .scan import scan_all_lr, scan_leftmost_lr
from .suffix import SuffixStructures
from .text import load_text
from .verify import all_intervals, sample_intervals, verify_text

EXIT_ERROR = 1
EXIT_INTERVAL = 2
EXIT_CORRUPT = 3


def _out(lines, stream) -> None:
    for line in lines:
        stream.write(line + "\n")


def read_query_file(path: str) -> list[tuple[int, int]]:
    pairs = []
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                fields = line.split()
                if not fields or fields[0].startswith("#"):
                    continue
                if len(fields) != 2:
                    raise InvalidInterval(f"{path}:{lineno}: expected 'x y'")
                try:
                    pairs.append((int(fields[0]), int(fields[1])))
                except ValueError:
                    raise InvalidInterval(f"{path}:{lineno}: expected two integers") from None
    except OSError as exc:
        raise IoError(f"cannot read {path!r}: {exc}") from exc
    return pairs


def cmd_build(args, stdout) -> int:
    text = load_text(args.text, args.format)
    index = StabbingIndex.build(text)
    index.save(args.output)
    rows = [("n", index.n), ("llrc_size", index.llrc.size)]
    rows += [(f"time_{k}_s", f"{v:.6f}") for k, v in index.timings.as_dict().items()]
    _out((f"{k}\t{v}" for k, v in rows), stdout)
    return 0


def cmd_query(args, stdout) -> int:
    index = StabbingIndex.load(args.index)
    engine = index.engine(args.engine)
    query = engine.query_all if args.all else engine.query_one
    if args.queries:
        pairs = read_query_file(args.queries)
        for x, y in pairs:
            check_interval(x, y, index.n)
        with ThreadPoolExecutor(max_workers=max(1, args.workers)) as pool:
            answers = pool.map(lambda q: query(*q), pairs)
            for (x, y), answer in zip(pairs, answers):
                _out((f"{x}\t{y}\t{line}" for line in answer.lines()), stdout)
        return 0
    if args.x is None or args.y is None:
        raise InvalidInterval("query needs X Y or --queries FILE")
    _out(query(args.x, args.y).lines(), stdout)
    return 0


def cmd_scan(args, stdout) -> int:
    text = load_text(args.text, args.format)
    check_interval(args.x, args.y, text.n)
    ss = SuffixStructures.build(text)
    fn = scan_all_lr if args.all else scan_leftmost_lr
    _out(fn(args.x, args.y, ss.rank, ss.lcp).lines(), stdout)
    return 0


def cmd_verify(args, stdout) -> int:
    text = load_text(args.text, args.format)
    if args.sample:
        config = OracleConfig(max_n=max(args.max_n, text.n))
        intervals = sample_intervals(text.n, args.sample, args.seed)
    elif text.n > args.max_n:
        raise TextTooLarge(f"n={text.n} exceeds --max-n {args.max_n}; use --sample K")
    else:
        config = OracleConfig(max_n=args.max_n)
        intervals = all_intervals(text.n)
    report = verify_text(text, intervals, config)
    stdout.write(f"checked\t{report.checked}\n")
    for failure in report.invariant_failures[:1]:
        stdout.write(f"invariant\t{failure}\n")
    for stats, name in ((report.rmq_stats, "rmq"), (report.dmq_stats, "dmq")):
        for calls, occ in stats.bound_violations()[:1]:
            stdout.write(f"bound\t{name}: {calls} calls for occ={occ}\n")
    if report.mismatches:
        stdout.write("counterexample\n" + report.mismatches[0].describe() + "\n")
    stdout.write("PASS\n" if report.ok else "FAIL\n")
    return 0 if report.ok else EXIT_ERROR


def cmd_bench(args, stdout) -> int:
    seed = int(os.environ.get("LRSTAB_SEED", args.seed))
    config = BenchConfig(query_count=args.queries, delta=args.delta, mode=args.mode,
                         engine=args.engine, seed=seed, sweep=args.sweep)
    texts = [load_text(path, args.format) for path in args.texts]
    if args.random_mb:
        alphabet = args.alphabet.encode("latin-1")
        for size in args.random_mb.split(","):
            texts.append(random_text(int(float(size) * MB), alphabet, seed))
    if not texts:
        raise LrstabError("bench needs TEXT paths or --random-mb")
    warm_up()
    reports = [run_bench(text, config) for text in texts]
    table = format_reports(reports)
    stdout.write(table)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(table)
    if args.figure:
        from .plotting import plot_reports

        plot_reports(reports, args.figure)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrstab", description="Longest repeats covering position intervals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "fasta"), default="plain")

    p = sub.add_parser("build", help="build and save an index")
    p.add_argument("text")
    p.add_argument("-o", "--output", required=True)
    add_format(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="query a saved index")
    p.add_argument("index")
    p.add_argument("x", type=int, nargs="?")
    p.add_argument("y", type=int, nargs="?")
    p.add_argument("--all", action="store_true", help="report every choice")
    p.add_argument("--engine", choices=ENGINES, default="rmq")
    p.add_argument("--queries", metavar="FILE", help="one 'x y' pair per line")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("scan", help="index-free query on a text")
    p.add_argument("text")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--all", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="compare all engines with the brute-force oracle")
    p.add_argument("text")
    p.add_argument("--max-n", type=int, default=OracleConfig().max_n)
    p.add_argument("--sample", type=int, default=0, metavar="K",
                   help="check K random intervals instead of all of them")
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time index construction and queries")
    p.add_argument("texts", nargs="*")
    p.add_argument("--random-mb", metavar="SIZES",
                   help="comma-separated sizes of seeded random texts, in MB")
    p.add_argument("--alphabet", default="ACGT")
    p.add_argument("--engine", choices=BENCH_ENGINES, default="rmq")
    p.add_argument("--mode", choices=MODES, default="one")
    p.add_argument("--delta", type=int, default=1, help="interval size (1 = point query)")
    p.add_argument("--queries", type=int, default=100_000)
    p.add_argument("--sweep", action="store_true", help="query all n-delta+1 intervals")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", metavar="PATH", help="also write the table here")
    p.add_argument("--figure", metavar="PATH", help="render a figure (png/pdf/svg)")
    add_format(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, stdout)
    except InvalidInterval as exc:
        stderr.write(f"lrstab: {exc}\n")
        return EXIT_INTERVAL
    except CorruptIndex as exc:
        stderr.write(f"lrstab: corrupt index: {exc}\n")
        return EXIT_CORRUPT
    except (LrstabError, ValueError) as exc:
        stderr.write(f"lrstab: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
