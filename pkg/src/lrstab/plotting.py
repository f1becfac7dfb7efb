"""Figures for benchmark reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

PHASES = [
    ("build_suffix_s", "suffix/rank/lcp"),
    ("build_llrc_s", "LLRc"),
    ("build_boundaries_s", "L/R boundaries"),
    ("build_range_max_s", "range-max"),
]


def _phase_bars(ax, reports):
    labels = [f"{r.n / (1 << 20):.3g} MB" if r.n >= 1 << 16 else str(r.n) for r in reports]
    bottom = [0.0] * len(reports)
    for key, label in PHASES:
        heights = [getattr(r, key) for r in reports]
        ax.bar(labels, heights, bottom=bottom, label=label)
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_ylabel("build time (s)")
    ax.set_xlabel("text size")
    ax.legend(fontsize=8)


def plot_reports(reports, path) -> None:
    """Stacked build phases, plus per-query cost when several sizes are given."""
    if len(reports) == 1:
        fig, ax = plt.subplots(figsize=(5, 4))
        _phase_bars(ax, reports)
        r = reports[0]
        ax.set_title(f"{r.engine}/{r.mode}, delta={r.delta}: {r.query_mean_us:.2f} us/query",
                     fontsize=9)
    else:
        fig, (ax, ax2) = plt.subplots(1, 2, figsize=(10, 4))
        _phase_bars(ax, reports)
        ns = [r.n for r in reports]
        ax2.plot(ns, [r.query_mean_us for r in reports], marker="o")
        ax2.set_xscale("log", base=2)
        ax2.set_ylim(bottom=0)
        ax2.set_xlabel("n (characters)")
        ax2.set_ylabel("mean time per query (us)")
        r = reports[0]
        ax2.set_title(f"{r.engine}/{r.mode}, delta={r.delta}", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
