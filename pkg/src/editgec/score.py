"""Span-edit extraction, M2-style scoring, gold-file ingestion, and the
approximate randomization significance test.

Matching is exact on (start, end, replacement) span edits; there is no
lattice re-segmentation of hypothesis edits, so scores lower-bound the
official MaxMatch numbers but are self-consistent.
"""

import random
from collections import Counter
from dataclasses import dataclass

from .align import refine_alignment, word_align
from .errors import FormatError, ValidationError


@dataclass(frozen=True, order=True)
class SpanEdit:
    start: int
    end: int  # exclusive; start == end encodes an insertion before start
    replacement: str  # possibly empty = deletion


def span_edits(src, other):
    """Canonical span edits turning src into other.

    Aligns, refines, and merges adjacent non-identity pairs into single
    edits.
    """
    alignment = refine_alignment(word_align(src, other))
    edits = []
    open_edit = None  # [start, end, tgt_start, tgt_end]
    for pair in alignment.pairs:
        identity = (
            pair.src_end > pair.src_start
            and pair.tgt_end > pair.tgt_start
            and pair.src_text(src) == pair.tgt_text(other)
        )
        if identity:
            if open_edit is not None:
                edits.append(_close(open_edit, other))
                open_edit = None
            continue
        if open_edit is None:
            open_edit = [pair.src_start, pair.src_end, pair.tgt_start, pair.tgt_end]
        else:
            open_edit[1] = pair.src_end
            open_edit[3] = pair.tgt_end
    if open_edit is not None:
        edits.append(_close(open_edit, other))
    return edits


def _close(open_edit, other):
    s, e, ts, te = open_edit
    return SpanEdit(s, e, " ".join(other[ts:te]))


def apply_span_edits(src, edits):
    """Apply non-overlapping span edits to the source tokens."""
    tokens = list(src)
    for edit in sorted(edits, key=lambda e: (e.start, e.end), reverse=True):
        tokens[edit.start:edit.end] = edit.replacement.split()
    return tokens


@dataclass
class ScoreReport:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def __add__(self, other):
        return ScoreReport(self.tp + other.tp, self.fp + other.fp, self.fn + other.fn)

    @property
    def precision(self):
        return 1.0 if self.tp + self.fp == 0 else self.tp / (self.tp + self.fp)

    @property
    def recall(self):
        return 1.0 if self.tp + self.fn == 0 else self.tp / (self.tp + self.fn)

    @property
    def f1(self):
        p, r = self.precision, self.recall
        return 0.0 if p + r == 0 else 2 * p * r / (p + r)

    @property
    def f05(self):
        p, r = self.precision, self.recall
        denom = 0.25 * p + r
        return 0.0 if denom == 0 else 1.25 * p * r / denom

    def machine_line(self):
        return (
            f"{self.tp} {self.fp} {self.fn} "
            f"{self.precision:.4f} {self.recall:.4f} {self.f1:.4f} {self.f05:.4f}"
        )


def sentence_counts(src, gold_edits, hyp):
    """(tp, fp, fn) for one sentence via exact span-edit matching."""
    for edit in gold_edits:
        if not 0 <= edit.start <= edit.end <= len(src):
            raise ValidationError(f"gold edit {edit} out of range for {len(src)} tokens")
    hyp_edits = span_edits(src, hyp)
    gold_c = Counter(gold_edits)
    hyp_c = Counter(hyp_edits)
    tp = sum((gold_c & hyp_c).values())
    return ScoreReport(tp, sum(hyp_c.values()) - tp, sum(gold_c.values()) - tp)


def m2_score(sources, golds, hyps):
    """Corpus-level score: counts aggregate over sentences before P/R/F."""
    if not (len(sources) == len(golds) == len(hyps)):
        raise ValidationError(
            f"mismatched corpus sizes: {len(sources)} src, {len(golds)} gold, {len(hyps)} hyp"
        )
    total = ScoreReport()
    for i, (src, gold, hyp) in enumerate(zip(sources, golds, hyps)):
        try:
            total = total + sentence_counts(src, gold, hyp)
        except ValidationError as exc:
            raise ValidationError(f"sentence {i}: {exc}") from exc
    return total


def gold_from_references(sources, references):
    return [span_edits(s, r) for s, r in zip(sources, references)]


def parse_m2(path_or_lines, annotator=0):
    """Parse an .m2 file into per-sentence (source tokens, gold edits)."""
    if isinstance(path_or_lines, str):
        with open(path_or_lines, encoding="utf-8") as fh:
            return _parse_m2_lines(fh, path_or_lines, annotator)
    return _parse_m2_lines(path_or_lines, "<m2>", annotator)


def _parse_m2_lines(lines, name, annotator):
    out = []
    src = None
    edits = []
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\n")
        if not line:
            if src is not None:
                out.append((src, edits))
                src, edits = None, []
            continue
        if line.startswith("S ") or line == "S":
            if src is not None:
                out.append((src, edits))
                edits = []
            src = line[2:].split()
            continue
        if line.startswith("A "):
            if src is None:
                raise FormatError(f"{name}:{lineno}: annotation before any S line")
            fields = line[2:].split("|||")
            if len(fields) < 3:
                raise FormatError(f"{name}:{lineno}: expected span|||type|||correction|||...")
            span = fields[0].split()
            if len(span) != 2:
                raise FormatError(f"{name}:{lineno}: bad span {fields[0]!r}")
            try:
                start, end = int(span[0]), int(span[1])
            except ValueError as exc:
                raise FormatError(f"{name}:{lineno}: bad span {fields[0]!r}") from exc
            etype = fields[1]
            if len(fields) >= 6:
                try:
                    ann = int(fields[5])
                except ValueError as exc:
                    raise FormatError(f"{name}:{lineno}: bad annotator id") from exc
                if ann != annotator:
                    continue
            if etype.lower() == "noop" or (start == -1 and end == -1):
                continue
            if start > end:
                raise FormatError(f"{name}:{lineno}: start > end")
            if not 0 <= start <= end <= len(src):
                raise FormatError(f"{name}:{lineno}: span outside sentence")
            correction = fields[2]
            if correction == "-NONE-":
                correction = ""
            edits.append(SpanEdit(start, end, " ".join(correction.split())))
            continue
        raise FormatError(f"{name}:{lineno}: unrecognized line {line!r}")
    if src is not None:
        out.append((src, edits))
    return out


def significance(sources, golds, hyps_a, hyps_b, trials=1000, seed=42):
    """Two-sided approximate randomization test on corpus F0.5.

    Sentence-level swaps with probability 1/2 under a seeded generator;
    add-one estimator so p is never 0.
    """
    if len(hyps_a) != len(hyps_b):
        raise ValidationError(
            f"system outputs differ in sentence count: {len(hyps_a)} vs {len(hyps_b)}"
        )
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    counts_a = [sentence_counts(s, g, h) for s, g, h in zip(sources, golds, hyps_a)]
    counts_b = [sentence_counts(s, g, h) for s, g, h in zip(sources, golds, hyps_b)]

    def stat(ca, cb):
        return abs(sum(ca, ScoreReport()).f05 - sum(cb, ScoreReport()).f05)

    observed = stat(counts_a, counts_b)
    rng = random.Random(seed)
    hits = 0
    n = len(counts_a)
    for _ in range(trials):
        ta, tb = [], []
        for i in range(n):
            if rng.random() < 0.5:
                ta.append(counts_b[i])
                tb.append(counts_a[i])
            else:
                ta.append(counts_a[i])
                tb.append(counts_b[i])
        if stat(ta, tb) >= observed:
            hits += 1
    return (1 + hits) / (1 + trials)
