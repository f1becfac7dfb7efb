"""Building, saving and loading a complete stabbing-query index.

Index file layout (all integers little-endian)::

    magic        8 bytes   b"LRSTAB01"
    version      u32
    n            u64
    llrc_size    u64
    llrc         llrc_size pairs of u64 (start, end), 1-based
    L            n x i64   (-1 sentinel)
    R            n x i64   (-1 sentinel)
    checksum     u64       optional, blake2b-64 of the text bytes

The range-max table is not stored; it is rebuilt on load.
"""

from __future__ import annotations

import hashlib
import os
import struct
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .boundary import Boundaries, build_boundaries
from .dmq import DmqIndex, build_dmq_index
from .errors import CorruptIndex, IoError
from .llr import LlrcArray, build_llrc
from .rmq import RangeMax, RmqIndex
from .suffix import SuffixStructures
from .text import Text, as_text

MAGIC = b"LRSTAB01"
VERSION = 1
_HEADER = struct.Struct("<8sIQQ")
ENGINES = ("rmq", "dmq")


def text_checksum(data: bytes) -> int:
    return int.from_bytes(hashlib.blake2b(data, digest_size=8).digest(), "little")


@dataclass
class BuildTimings:
    suffix: float = 0.0
    llrc: float = 0.0
    boundaries: float = 0.0
    range_max: float = 0.0

    @property
    def total(self) -> float:
        return self.suffix + self.llrc + self.boundaries + self.range_max

    def as_dict(self) -> dict[str, float]:
        return {"suffix": self.suffix, "llrc": self.llrc,
                "boundaries": self.boundaries, "range_max": self.range_max,
                "total": self.total}


@dataclass
class StabbingIndex:
    n: int
    llrc: LlrcArray
    boundaries: Boundaries
    rmq: RmqIndex
    checksum: Optional[int] = None
    timings: BuildTimings = field(default_factory=BuildTimings)
    _dmq: Optional[DmqIndex] = field(default=None, repr=False)

    @classmethod
    def build(cls, text: Text | bytes | str) -> "StabbingIndex":
        text = as_text(text)
        timings = BuildTimings()
        t0 = time.perf_counter()
        ss = SuffixStructures.build(text)
        t1 = time.perf_counter()
        llrc = build_llrc(ss.rank, ss.lcp)
        del ss
        t2 = time.perf_counter()
        boundaries = build_boundaries(llrc, text.n)
        t3 = time.perf_counter()
        rm = RangeMax(llrc.weights)
        t4 = time.perf_counter()
        timings.suffix, timings.llrc = t1 - t0, t2 - t1
        timings.boundaries, timings.range_max = t3 - t2, t4 - t3
        rmq = RmqIndex(llrc, boundaries, rm, text.n)
        return cls(text.n, llrc, boundaries, rmq, text_checksum(text.data), timings)

    @classmethod
    def from_parts(cls, n: int, llrc: LlrcArray, boundaries: Boundaries,
                   checksum: Optional[int] = None) -> "StabbingIndex":
        rmq = RmqIndex(llrc, boundaries, RangeMax(llrc.weights), n)
        return cls(n, llrc, boundaries, rmq, checksum)

    @property
    def dmq(self) -> DmqIndex:
        if self._dmq is None:
            self._dmq = build_dmq_index(self.llrc, self.n, self.rmq.rm)
        return self._dmq

    def engine(self, name: str):
        if name == "rmq":
            return self.rmq
        if name == "dmq":
            return self.dmq
        raise ValueError(f"unknown engine {name!r}; expected one of {ENGINES}")

    @property
    def nbytes(self) -> int:
        return self.rmq.nbytes

    def to_bytes(self) -> bytes:
        header = _HEADER.pack(MAGIC, VERSION, self.n, self.llrc.size)
        pairs = np.empty(2 * self.llrc.size, dtype="<u8")
        pairs[0::2] = self.llrc.starts
        pairs[1::2] = self.llrc.ends
        parts = [header, pairs.tobytes(),
                 self.boundaries.L.astype("<i8").tobytes(),
                 self.boundaries.R.astype("<i8").tobytes()]
        if self.checksum is not None:
            parts.append(struct.pack("<Q", self.checksum))
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, raw: bytes) -> "StabbingIndex":
        if len(raw) < _HEADER.size:
            raise CorruptIndex("index file truncated")
        magic, version, n, size = _HEADER.unpack_from(raw)
        if magic != MAGIC:
            raise CorruptIndex("bad magic; not an index file")
        if version != VERSION:
            raise CorruptIndex(f"unsupported index version {version}")
        body = _HEADER.size + 16 * size + 16 * n
        if len(raw) == body:
            checksum = None
        elif len(raw) == body + 8:
            (checksum,) = struct.unpack_from("<Q", raw, body)
        else:
            raise CorruptIndex(f"index size {len(raw)} does not match header")
        off = _HEADER.size
        pairs = np.frombuffer(raw, dtype="<u8", count=2 * size, offset=off).astype(np.int64)
        off += 16 * size
        left = np.frombuffer(raw, dtype="<i8", count=n, offset=off).astype(np.int64)
        off += 8 * n
        right = np.frombuffer(raw, dtype="<i8", count=n, offset=off).astype(np.int64)
        llrc = LlrcArray(pairs[0::2].copy(), pairs[1::2].copy())
        if size and (llrc.starts[0] < 1 or llrc.ends[-1] > n
                     or np.any(llrc.ends < llrc.starts) or not llrc.is_staircase()):
            raise CorruptIndex("LLRc entries are not a valid staircase")
        expected = build_boundaries(llrc, n)
        if not (np.array_equal(expected.L, left) and np.array_equal(expected.R, right)):
            raise CorruptIndex("boundary arrays inconsistent with LLRc")
        return cls.from_parts(n, llrc, Boundaries(left, right), checksum)

    def save(self, path: str | os.PathLike) -> None:
        try:
            with open(path, "wb") as fh:
                fh.write(self.to_bytes())
        except OSError as exc:
            raise IoError(f"cannot write {path!r}: {exc}") from exc

    @classmethod
    def load(cls, path: str | os.PathLike) -> "StabbingIndex":
        try:
            with open(path, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise IoError(f"cannot read {path!r}: {exc}") from exc
        return cls.from_bytes(raw)


def warm_up() -> None:
    """Load or compile the numba kernels so later builds time only real work."""
    StabbingIndex.build(b"abracadabra")


def build_index(text: Text | bytes | str) -> StabbingIndex:
    return StabbingIndex.build(text)
