"""Brute-force ground truth built only on naive occurrence counting.

Nothing here touches suffix arrays or LLRs; the point is to have answers
that do not share any code path with the indexes they check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .answer import EMPTY, LrAnswer, check_interval
from .errors import InvalidRange, TextTooLarge
from .text import Text, as_text


@dataclass(frozen=True)
class OracleConfig:
    max_n: int = 512


DEFAULT_CONFIG = OracleConfig()


def count_occurrences(data: bytes, pattern: bytes) -> int:
    """Number of distinct start positions of ``pattern`` (overlaps count)."""
    count = 0
    pos = data.find(pattern)
    while pos != -1:
        count += 1
        pos = data.find(pattern, pos + 1)
    return count


def _guard(text: Text, config: OracleConfig) -> None:
    if text.n > config.max_n:
        raise TextTooLarge(f"oracle accepts n <= {config.max_n}, got {text.n}")


def is_repeat(text: Text | bytes | str, i: int, j: int,
              config: OracleConfig = DEFAULT_CONFIG) -> bool:
    text = as_text(text)
    _guard(text, config)
    if not 1 <= i <= j <= text.n:
        raise InvalidRange(f"invalid range [{i}..{j}] for text of length {text.n}")
    return count_occurrences(text.data, text.data[i - 1:j]) >= 2


class Oracle:
    """Memoised naive repeat tests over one text."""

    def __init__(self, text: Text | bytes | str, config: OracleConfig = DEFAULT_CONFIG):
        self.text = as_text(text)
        _guard(self.text, config)
        self._counts: dict[bytes, int] = {}

    def is_repeat(self, i: int, j: int) -> bool:
        sub = self.text.data[i - 1:j]
        count = self._counts.get(sub)
        if count is None:
            count = self._counts[sub] = count_occurrences(self.text.data, sub)
        return count >= 2

    def brute_lr(self, x: int, y: int) -> LrAnswer:
        """All longest repeats whose span covers ``[x..y]``.

        Every start ``i <= x`` is tried; for each, the end is pushed right
        from ``y`` while the span stays a repeat (any prefix of a repeat is
        a repeat, so the first failure ends that start).
        """
        n = self.text.n
        check_interval(x, y, n)
        best = 0
        spans = []
        for i in range(1, x + 1):
            if not self.is_repeat(i, y):
                continue
            j = y
            while j < n and self.is_repeat(i, j + 1):
                j += 1
            length = j - i + 1
            if length > best:
                best = length
                spans = [(i, j)]
            elif length == best:
                spans.append((i, j))
        if not spans:
            return EMPTY
        return LrAnswer(tuple(spans))

    def repeat_spans(self) -> list[tuple[int, int]]:
        """Every span ``(i, j)`` whose substring is a repeat."""
        n = self.text.n
        out = []
        for i in range(1, n + 1):
            j = i
            while j <= n and self.is_repeat(i, j):
                out.append((i, j))
                j += 1
        return out


def brute_lr(text: Text | bytes | str, x: int, y: int,
             config: OracleConfig = DEFAULT_CONFIG) -> LrAnswer:
    return Oracle(text, config).brute_lr(x, y)
