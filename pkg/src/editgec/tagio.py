"""Tag file format: UTF-8 TSV, one unit per line, blank line between
sentences, with a header recording granularity and compression.

    #granularity=word|subword #compressed=0|1
    surface<TAB>word_index<TAB>tag
    ...

A zero-unit sentence is encoded as a single "#empty" line so the file
round-trips exactly.
"""

import io

from .errors import FormatError
from .tags import TaggedSentence, TagUnit, parse, serialize


def format_header(granularity, compressed):
    return f"#granularity={granularity} #compressed={1 if compressed else 0}"


def write_tag_file(path, sentences, granularity, compressed):
    with open(path, "w", encoding="utf-8") as fh:
        write_tag_stream(fh, sentences, granularity, compressed)


def write_tag_stream(fh, sentences, granularity, compressed):
    fh.write(format_header(granularity, compressed) + "\n")
    for sent in sentences:
        if not sent.units:
            fh.write("#empty\n")
        for unit in sent.units:
            fh.write(f"{unit.surface}\t{unit.word_index}\t{serialize(unit.ops)}\n")
        fh.write("\n")


def _parse_header(line, where):
    fields = line.split()
    meta = {}
    for f in fields:
        if not f.startswith("#") or "=" not in f:
            raise FormatError(f"{where}: bad header field {f!r}")
        k, v = f[1:].split("=", 1)
        meta[k] = v
    gran = meta.get("granularity")
    comp = meta.get("compressed")
    if gran not in ("word", "subword") or comp not in ("0", "1"):
        raise FormatError(f"{where}: bad tag-file header {line!r}")
    return gran, comp == "1"


def read_tag_file(path):
    """Returns (granularity, compressed, list of TaggedSentence)."""
    with open(path, encoding="utf-8") as fh:
        return read_tag_stream(fh, name=path)


def read_tag_string(text, name="<string>"):
    return read_tag_stream(io.StringIO(text), name=name)


def read_tag_stream(fh, name="<stream>"):
    header = fh.readline().rstrip("\n")
    if not header:
        raise FormatError(f"{name}: missing tag-file header")
    granularity, compressed = _parse_header(header, f"{name}:1")
    sentences = []
    units = []
    open_block = False
    for lineno, line in enumerate(fh, 2):
        line = line.rstrip("\n")
        if not line:
            if open_block:
                sentences.append(TaggedSentence(units, granularity, compressed))
                units = []
                open_block = False
            continue
        if line == "#empty":
            if units:
                raise FormatError(f"{name}:{lineno}: #empty inside a sentence block")
            open_block = True
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise FormatError(f"{name}:{lineno}: expected surface<TAB>index<TAB>tag")
        surface, idx_s, tag = fields
        try:
            word_index = int(idx_s)
        except ValueError as exc:
            raise FormatError(f"{name}:{lineno}: bad word index {idx_s!r}") from exc
        if units and word_index < units[-1].word_index:
            raise FormatError(f"{name}:{lineno}: word indices must be non-decreasing")
        try:
            ops = parse(tag)
        except FormatError as exc:
            raise FormatError(f"{name}:{lineno}: {exc}") from exc
        units.append(TagUnit(surface, word_index, ops))
        open_block = True
    if open_block:
        sentences.append(TaggedSentence(units, granularity, compressed))
    return granularity, compressed, sentences
