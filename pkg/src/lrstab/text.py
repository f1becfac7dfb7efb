"""Input text handling.

Positions exposed by this package are 1-based: ``substring(text, 1, n)`` is
the whole text.  Internally everything is a plain ``bytes`` object.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from typing import BinaryIO, Union

from .errors import EmptyText, FormatError, InvalidRange, IoError

Source = Union[str, os.PathLike, BinaryIO]


@dataclass(frozen=True)
class Text:
    data: bytes
    source_name: str = "<memory>"

    def __post_init__(self):
        if isinstance(self.data, str):
            object.__setattr__(self, "data", self.data.encode("latin-1"))
        elif not isinstance(self.data, bytes):
            object.__setattr__(self, "data", bytes(self.data))

    @property
    def n(self) -> int:
        return len(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def __str__(self) -> str:
        return self.data.decode("latin-1")

    def substring(self, i: int, j: int) -> bytes:
        return substring(self, i, j)


def as_text(obj: Text | bytes | str) -> Text:
    """Coerce raw ``bytes``/``str`` into a :class:`Text`."""
    if isinstance(obj, Text):
        return obj
    return Text(obj)


def substring(text: Text | bytes | str, i: int, j: int) -> bytes:
    """Return S[i..j] (1-based, inclusive)."""
    data = as_text(text).data
    if not 1 <= i <= j <= len(data):
        raise InvalidRange(f"invalid range [{i}..{j}] for text of length {len(data)}")
    return data[i - 1:j]


def _read_source(source: Source) -> tuple[bytes, str]:
    if hasattr(source, "read"):
        name = getattr(source, "name", "<stream>")
        try:
            raw = source.read()
        except OSError as exc:
            raise IoError(str(exc)) from exc
        if isinstance(raw, str):
            raw = raw.encode("latin-1")
        return raw, str(name)
    try:
        with open(source, "rb") as fh:
            return fh.read(), os.fspath(source)
    except OSError as exc:
        raise IoError(f"cannot read {source!r}: {exc}") from exc


def parse_fasta(raw: bytes) -> bytes:
    """Concatenate the sequence lines of every record, dropping headers."""
    chunks = []
    seen_header = False
    for line in io.BytesIO(raw):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(b">"):
            seen_header = True
            continue
        if not seen_header:
            raise FormatError("FASTA input must start with a '>' header line")
        chunks.append(b"".join(stripped.split()))
    if not seen_header:
        raise FormatError("no '>' header found in FASTA input")
    return b"".join(chunks)


def load_text(source: Source, format: str = "plain") -> Text:
    """Load a text from a path or binary stream.

    ``plain`` keeps every byte except one trailing newline.  ``fasta``
    concatenates all record sequences with whitespace removed; characters
    are kept verbatim (no case folding).
    """
    raw, name = _read_source(source)
    if format == "plain":
        data = raw[:-1] if raw.endswith(b"\n") else raw
    elif format == "fasta":
        data = parse_fasta(raw)
    else:
        raise ValueError(f"unknown text format {format!r}")
    if not data:
        raise EmptyText(f"{name}: text is empty")
    return Text(data, name)
