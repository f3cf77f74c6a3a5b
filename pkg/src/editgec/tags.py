"""The edit-tag language: ops, serialization, compression, expansion.

An op is a tuple: ('K',), ('D',), ('K*',), ('D*',), ('M',), ('R', char),
('I', string), ('A', string). A tag is a tuple of ops. Uncompressed tags
carry single-character I/A payloads; compression merges I/A runs and may
star at most one maximal K or D run so the tag expands uniquely against any
unit length.
"""

from collections import Counter
from dataclasses import dataclass, field

from .errors import AmbiguousTag, ExpansionUnderflow, TagError, TagParseError

K = ("K",)
D = ("D",)
KSTAR = ("K*",)
DSTAR = ("D*",)
M = ("M",)

KEEP_TAG = "K*"

_CONSUME_ONE = {"K", "D", "R"}
_STARRED = {"K*", "D*"}


def R(c):
    return ("R", c)


def I(s):  # noqa: E743 - named after the op it builds
    return ("I", s)


def A(s):
    return ("A", s)


def consumed_len(ops):
    """Number of source characters a tag consumes (stars count 0)."""
    return sum(1 for op in ops if op[0] in _CONSUME_ONE)


def star_count(ops):
    return sum(1 for op in ops if op[0] in _STARRED)


def _escape(payload):
    return payload.replace("\\", "\\\\").replace("]", "\\]")


def serialize(ops):
    out = []
    for op in ops:
        kind = op[0]
        if kind in ("K", "D", "K*", "D*", "M"):
            out.append(kind)
        elif kind in ("R", "I", "A"):
            out.append(f"{kind}_[{_escape(op[1])}]")
        else:
            raise TagError(f"unknown op {op!r}")
    return "".join(out)


def parse(text):
    """Inverse of serialize; raises TagParseError on malformed input."""
    ops = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in ("K", "D"):
            if i + 1 < n and text[i + 1] == "*":
                ops.append((c + "*",))
                i += 2
            else:
                ops.append((c,))
                i += 1
        elif c == "M":
            ops.append(M)
            i += 1
        elif c in ("R", "I", "A"):
            if text[i + 1:i + 3] != "_[":
                raise TagParseError(f"expected _[ after {c} at {i} in {text!r}")
            j = i + 3
            payload = []
            while True:
                if j >= n:
                    raise TagParseError(f"unterminated payload at {i} in {text!r}")
                p = text[j]
                if p == "\\":
                    if j + 1 >= n or text[j + 1] not in ("\\", "]"):
                        raise TagParseError(f"bad escape at {j} in {text!r}")
                    payload.append(text[j + 1])
                    j += 2
                elif p == "]":
                    break
                else:
                    payload.append(p)
                    j += 1
            payload = "".join(payload)
            if c == "R" and len(payload) != 1:
                raise TagParseError(f"R payload must be one char in {text!r}")
            if c in ("I", "A") and not payload:
                raise TagParseError(f"{c} payload must be non-empty in {text!r}")
            ops.append((c, payload))
            i = j + 1
        else:
            raise TagParseError(f"unexpected {c!r} at {i} in {text!r}")
    _validate(ops, text)
    return tuple(ops)


def _validate(ops, text):
    for idx, op in enumerate(ops):
        if op[0] == "M" and idx != 0:
            raise TagParseError(f"M only valid in first position: {text!r}")
    if star_count(ops) > 1:
        raise TagParseError(f"more than one starred consuming op: {text!r}")


def merge_payload_runs(ops):
    """Merge maximal runs of I (and of A) into single ops."""
    out = []
    for op in ops:
        if out and op[0] in ("I", "A") and out[-1][0] == op[0]:
            out[-1] = (op[0], out[-1][1] + op[1])
        else:
            out.append(op)
    return tuple(out)


def compression_candidates(ops):
    """All compressed candidates of an uncompressed tag.

    I/A runs are always merged. Candidates star at most one maximal K-run or
    D-run of length >= 2. Returns (merged, candidates) where candidates[0] is
    the unstarred form; each other entry is (candidate, run_length, run_pos).
    """
    if star_count(ops):
        raise TagError("compression input must be uncompressed")
    merged = merge_payload_runs(ops)
    runs = []  # (start, length) over merged, for K/D runs of identical kind
    i = 0
    n = len(merged)
    while i < n:
        kind = merged[i][0]
        if kind in ("K", "D"):
            j = i
            while j < n and merged[j][0] == kind:
                j += 1
            if j - i >= 2:
                runs.append((i, j - i, kind))
            i = j
        else:
            i += 1
    candidates = [(merged, 0, -1)]
    for start, length, kind in runs:
        starred = merged[:start] + ((kind + "*",),) + merged[start + length:]
        candidates.append((starred, length, start))
    return merged, candidates


def compress(ops, selector=None):
    """Compress one uncompressed tag. Without a selector, star the longest
    run (leftmost on ties)."""
    merged, candidates = compression_candidates(ops)
    if selector is not None:
        return selector.choose(merged, candidates)
    return _longest_run_choice(candidates)


def _longest_run_choice(candidates):
    best = candidates[0]
    for cand in candidates[1:]:
        if cand[1] > best[1]:
            best = cand
    return best[0]


class CompressionSelector:
    """Frequency-based choice among compression candidates.

    Built on a first pass over the training tags: every occurrence of a tag
    counts once for each of its candidate serializations, so shapes shared
    across word lengths accumulate evidence. Ties fall back to the longest
    starred run, then the leftmost. Serializable so dev/test reuse the
    training-time choices.
    """

    def __init__(self):
        self.counts = Counter()
        self._chosen = {}  # serialized merged tag -> ops

    def observe(self, ops):
        merged, candidates = compression_candidates(ops)
        for cand, _, _ in candidates:
            self.counts[serialize(cand)] += 1
        self._chosen.pop(serialize(merged), None)

    def choose(self, merged, candidates=None):
        key = serialize(merged)
        if key in self._chosen:
            return self._chosen[key]
        if candidates is None:
            _, candidates = compression_candidates(merged)
        best = None
        best_key = None
        for cand, run_len, run_pos in candidates:
            k = (self.counts[serialize(cand)], run_len, -run_pos)
            if best_key is None or k > best_key:
                best_key = k
                best = cand
        self._chosen[key] = best
        return best

    def compress(self, ops):
        merged, candidates = compression_candidates(ops)
        return self.choose(merged, candidates)

    def save(self, path):
        rows = sorted(self._chosen.items())
        with open(path, "w", encoding="utf-8") as fh:
            for merged, chosen in rows:
                fh.write(f"{merged}\t{serialize(chosen)}\n")

    @classmethod
    def load(cls, path):
        sel = cls()
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                if not line:
                    continue
                fields = line.split("\t")
                if len(fields) != 2:
                    raise TagParseError(f"{path}:{lineno}: expected 2 fields")
                sel._chosen[fields[0]] = parse(fields[1])
        return sel


def build_compression_selector(corpus_tags):
    """First pass over uncompressed training tags -> selector."""
    sel = CompressionSelector()
    for ops in corpus_tags:
        sel.observe(ops)
    return sel


def expand(ops, source_len):
    """Expand a compressed tag against a unit of source_len characters."""
    stars = star_count(ops)
    if stars > 1:
        raise AmbiguousTag(f"{serialize(ops)} has {stars} starred ops")
    fixed = consumed_len(ops)
    if fixed > source_len:
        raise ExpansionUnderflow(
            f"{serialize(ops)} consumes {fixed} chars but unit has {source_len}"
        )
    if stars == 0:
        if fixed != source_len:
            raise ExpansionUnderflow(
                f"{serialize(ops)} consumes {fixed} chars, unit has {source_len}"
            )
        return tuple(ops)
    run_len = source_len - fixed
    out = []
    for op in ops:
        if op[0] in _STARRED:
            out.extend((op[0][0],) for _ in range(run_len))
        else:
            out.append(op)
    return tuple(out)


@dataclass(frozen=True)
class TagUnit:
    surface: str
    word_index: int
    ops: tuple


@dataclass
class TaggedSentence:
    units: list = field(default_factory=list)
    granularity: str = "word"  # word | subword
    compressed: bool = False

    def tags(self):
        return [serialize(u.ops) for u in self.units]
