import io

import pytest

from lrstab import EmptyText, FormatError, InvalidRange, IoError, Text, load_text, substring


def test_plain_strips_one_trailing_newline(tmp_path):
    p = tmp_path / "m.txt"
    p.write_bytes(b"mississippi\n")
    text = load_text(p)
    assert text.n == 11
    assert text.data == b"mississippi"
    assert text.source_name == str(p)


def test_plain_keeps_other_bytes():
    raw = b"ab\ncd\n\n"
    assert load_text(io.BytesIO(raw)).data == b"ab\ncd\n"
    assert load_text(io.BytesIO(b"  x \t")).data == b"  x \t"


def test_fasta_concatenates_records():
    raw = b">chr1\nAAABAB\nAABAAAB\nAAAB\n"
    text = load_text(io.BytesIO(raw), "fasta")
    assert text.data == b"AAABABAABAAABAAAB"
    assert text.n == 17


def test_fasta_multi_record_whitespace_and_case():
    raw = b">a desc\nAC GT\r\n\n>b\nacgt\n"
    assert load_text(io.BytesIO(raw), "fasta").data == b"ACGTacgt"


@pytest.mark.parametrize("raw", [b"ACGT\n", b"ACGT\n>late\nAC\n", b""])
def test_fasta_without_leading_header(raw):
    with pytest.raises(FormatError):
        load_text(io.BytesIO(raw), "fasta")


@pytest.mark.parametrize("raw,fmt", [(b"", "plain"), (b"\n", "plain"), (b">only\n", "fasta")])
def test_empty_text(raw, fmt):
    with pytest.raises(EmptyText):
        load_text(io.BytesIO(raw), fmt)


def test_unreadable_source(tmp_path):
    with pytest.raises(IoError):
        load_text(tmp_path / "missing.txt")


def test_round_trip_of_stripped_input(tmp_path):
    raw = bytes(range(256)) + b"\n"
    p = tmp_path / "bytes.bin"
    p.write_bytes(raw)
    assert load_text(p).data == raw[:-1]


@pytest.mark.parametrize("i,j,expected", [(2, 5, b"issi"), (1, 11, b"mississippi"), (11, 11, b"i")])
def test_substring(i, j, expected):
    assert substring(Text("mississippi"), i, j) == expected


@pytest.mark.parametrize("i,j", [(5, 2), (0, 3), (1, 12), (-1, 2)])
def test_substring_invalid(i, j):
    with pytest.raises(InvalidRange):
        substring("mississippi", i, j)


def test_substring_length_property():
    t = Text("abracadabra")
    for i in range(1, t.n + 1):
        for j in range(i, t.n + 1):
            assert len(t.substring(i, j)) == j - i + 1
