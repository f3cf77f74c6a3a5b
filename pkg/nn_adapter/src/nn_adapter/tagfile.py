"""Reader/writer for the shared tag-file format, with tags kept opaque.

    #granularity=word|subword #compressed=0|1
    surface<TAB>word_index<TAB>tag
    ...                              (blank line between sentences,
                                      "#empty" for a zero-unit sentence)

This is the only data format exchanged with the edit-tagging package; the
adapter never parses the tags themselves.
"""

from collections import namedtuple


class FormatError(Exception):
    pass


Unit = namedtuple("Unit", "surface word_index tag")


def read_tag_file(path):
    """Returns (granularity, compressed, sentences) — each sentence a list of Unit."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        meta = dict(
            f[1:].split("=", 1) for f in header.split() if f.startswith("#") and "=" in f
        )
        granularity = meta.get("granularity")
        compressed = meta.get("compressed")
        if granularity not in ("word", "subword") or compressed not in ("0", "1"):
            raise FormatError(f"{path}: bad tag-file header {header!r}")
        sentences = []
        units = []
        open_block = False
        for lineno, line in enumerate(fh, 2):
            line = line.rstrip("\n")
            if not line:
                if open_block:
                    sentences.append(units)
                    units = []
                    open_block = False
                continue
            if line == "#empty":
                open_block = True
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise FormatError(f"{path}:{lineno}: expected surface<TAB>index<TAB>tag")
            try:
                idx = int(fields[1])
            except ValueError as exc:
                raise FormatError(f"{path}:{lineno}: bad word index {fields[1]!r}") from exc
            units.append(Unit(fields[0], idx, fields[2]))
            open_block = True
        if open_block:
            sentences.append(units)
    return granularity, compressed == "1", sentences


def write_tag_file(path, sentences, granularity, compressed):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"#granularity={granularity} #compressed={1 if compressed else 0}\n")
        for units in sentences:
            if not units:
                fh.write("#empty\n")
            for u in units:
                fh.write(f"{u.surface}\t{u.word_index}\t{u.tag}\n")
            fh.write("\n")
