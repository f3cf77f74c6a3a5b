"""Tag-file format round trips and error reporting."""

import io

import pytest

from editgec import tagio
from editgec.errors import FormatError
from editgec.extract import extract_edits
from editgec.tags import TaggedSentence


def _roundtrip(sentences, granularity="word", compressed=False):
    buf = io.StringIO()
    tagio.write_tag_stream(buf, sentences, granularity, compressed)
    return tagio.read_tag_string(buf.getvalue())


def test_roundtrip_basic():
    sents = [
        extract_edits(["ab", "cd"], ["abcd"]),
        extract_edits(["x"], ["x"]),
    ]
    gran, comp, back = _roundtrip(sents)
    assert (gran, comp) == ("word", False)
    assert [s.tags() for s in back] == [s.tags() for s in sents]
    assert [u.surface for s in back for u in s.units] == ["ab", "cd", "x"]


def test_roundtrip_preserves_empty_sentences():
    sents = [extract_edits(["a"], ["a"]), TaggedSentence([]), extract_edits(["b"], ["b"])]
    _, _, back = _roundtrip(sents)
    assert len(back) == 3
    assert back[1].units == []


def test_header_written():
    buf = io.StringIO()
    tagio.write_tag_stream(buf, [], "subword", True)
    assert buf.getvalue().splitlines()[0] == "#granularity=subword #compressed=1"


def test_missing_header_rejected():
    with pytest.raises(FormatError):
        tagio.read_tag_string("")
    with pytest.raises(FormatError):
        tagio.read_tag_string("ab\t0\tKK\n")


def test_bad_header_values_rejected():
    with pytest.raises(FormatError):
        tagio.read_tag_string("#granularity=chars #compressed=0\n")
    with pytest.raises(FormatError):
        tagio.read_tag_string("#granularity=word #compressed=2\n")


def test_bad_rows_report_line_numbers():
    text = "#granularity=word #compressed=0\nab\t0\tKK\nbad line\n"
    with pytest.raises(FormatError, match=":3"):
        tagio.read_tag_string(text)


def test_bad_tag_rejected():
    text = "#granularity=word #compressed=0\nab\t0\tQQ\n"
    with pytest.raises(FormatError):
        tagio.read_tag_string(text)


def test_decreasing_word_index_rejected():
    text = "#granularity=subword #compressed=0\nab\t1\tKK\ncd\t0\tKK\n"
    with pytest.raises(FormatError, match="non-decreasing"):
        tagio.read_tag_string(text)


def test_trailing_blank_lines_are_tolerated():
    text = "#granularity=word #compressed=0\nab\t0\tKK\n\n\n\n"
    _, _, sents = tagio.read_tag_string(text)
    assert len(sents) == 1
