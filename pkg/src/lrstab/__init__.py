"""Longest repeats covering string position intervals.

Build an index once with :class:`StabbingIndex` and answer "which longest
repeat covers positions x..y" in constant time (one answer) or time linear
in the number of answers (all answers).  Index-free scans and a brute-force
oracle are provided for cross-checking.
"""

from .answer import LrAnswer, QueryInterval, QueryStats
from .boundary import Boundaries, build_boundaries
from .dmq import DmqIndex, build_dmq_index, dominance_max, query_all_2d, query_one_2d
from .errors import (
    CorruptIndex,
    EmptyText,
    FormatError,
    InvalidInterval,
    InvalidRange,
    IoError,
    LrstabError,
    TextTooLarge,
)
from .index import StabbingIndex, build_index
from .llr import LlrcArray, LlrEntry, build_llrc, llr_at
from .oracle import Oracle, OracleConfig, brute_lr, is_repeat
from .rmq import RangeMax, RmqIndex, build_rmq_index, query_all, query_one
from .scan import scan_all_lr, scan_leftmost_lr
from .suffix import SuffixStructures, build_lcp_array, build_rank_array, build_suffix_array
from .text import Text, load_text, substring

__version__ = "0.1.0"
