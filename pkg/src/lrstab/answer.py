"""Query and answer types shared by every query engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InvalidInterval

NONE_LINE = "-1\t-1\t0"


class QueryInterval(NamedTuple):
    x: int
    y: int

    @property
    def is_point(self) -> bool:
        return self.x == self.y


def check_interval(x: int, y: int, n: int) -> None:
    if x < 1 or y > n or x > y:
        raise InvalidInterval(f"invalid interval [{x}..{y}] for text of length {n}")


@dataclass(frozen=True)
class LrAnswer:
    """Longest repeats covering a query interval.

    ``spans`` holds 1-based inclusive ``(start, end)`` pairs, ascending by
    start, all of the same length.  An empty answer means no repeat covers
    the interval.
    """

    spans: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_spans(cls, spans) -> "LrAnswer":
        return cls(tuple(sorted((int(s), int(e)) for s, e in spans)))

    @property
    def length(self) -> int:
        if not self.spans:
            return 0
        s, e = self.spans[0]
        return e - s + 1

    @property
    def occ(self) -> int:
        return len(self.spans)

    @property
    def leftmost(self) -> tuple[int, int] | None:
        return self.spans[0] if self.spans else None

    def __bool__(self) -> bool:
        return bool(self.spans)

    def lines(self) -> list[str]:
        """Tab-separated ``start end length`` lines; ``-1 -1 0`` when empty."""
        if not self.spans:
            return [NONE_LINE]
        length = self.length
        return [f"{s}\t{e}\t{length}" for s, e in self.spans]


EMPTY = LrAnswer()


@dataclass
class QueryStats:
    """Counts primitive calls made while answering queries."""

    calls: int = 0
    queries: int = 0
    per_query: list[tuple[int, int]] = field(default_factory=list)

    def record(self, calls: int, occ: int) -> None:
        self.calls += calls
        self.queries += 1
        self.per_query.append((calls, occ))

    def bound_violations(self) -> list[tuple[int, int]]:
        """``(calls, occ)`` records that exceed ``2 * occ + 1`` calls."""
        return [(c, o) for c, o in self.per_query if c > 2 * o + 1]
