"""Taggers and inference drivers: oracle, lookup baseline, iterative and
cascaded correction, and edit-level majority-vote ensembling."""

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .errors import FormatError, TagError, ValidationError
from .extract import apply_tags, compress_sentence, extract_edits
from .score import apply_span_edits, span_edits
from .tags import KEEP_TAG, TaggedSentence, TagUnit, parse, serialize
from .vocab import coverage_stats

_BOS = "<s>"
_EOS = "</s>"
_SEP = "\x1f"


def oracle_tag(src, tgt, train_vocab, granularity="word", seg=None,
               selector=None, compressed=False):
    """True edits filtered to the training vocabulary (upper-bound input)."""
    tagged = extract_edits(src, tgt, granularity=granularity, seg=seg)
    if compressed:
        tagged = compress_sentence(tagged, selector)
    report = coverage_stats(train_vocab, [tagged])
    return report.oracle_sentences[0]


def _context_keys(surfaces, i):
    prev = surfaces[i - 1] if i > 0 else _BOS
    nxt = surfaces[i + 1] if i + 1 < len(surfaces) else _EOS
    return (prev, surfaces[i], nxt), surfaces[i]


def _marked_surfaces(tagged):
    """Subword surfaces with the continuation prefix restored."""
    out = []
    prev_word = None
    for unit in tagged.units:
        if unit.word_index == prev_word:
            out.append("##" + unit.surface)
        else:
            out.append(unit.surface)
        prev_word = unit.word_index
    return out


@dataclass
class LookupModel:
    """Subword trigram -> tag with unigram backoff and keep default.

    Each map stores the highest-frequency training tag; ties go to the
    lexicographically smaller tag.
    """

    trigram: dict = field(default_factory=dict)
    unigram: dict = field(default_factory=dict)
    compressed: bool = True

    def predict(self, surfaces, i):
        tri, uni = _context_keys(surfaces, i)
        entry = self.trigram.get(tri)
        if entry is None:
            entry = self.unigram.get(uni)
        return entry[0] if entry is not None else KEEP_TAG

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"#granularity=subword #compressed={1 if self.compressed else 0}\n")
            for kind, table in (("trigram", self.trigram), ("unigram", self.unigram)):
                for key, (tag, count) in sorted(table.items()):
                    key_s = _SEP.join(key) if isinstance(key, tuple) else key
                    fh.write(f"{kind}\t{key_s}\t{tag}\t{count}\n")

    @classmethod
    def load(cls, path):
        model = cls()
        with open(path, encoding="utf-8") as fh:
            header = fh.readline().rstrip("\n")
            if "#compressed=0" in header:
                model.compressed = False
            elif "#compressed=1" not in header:
                raise FormatError(f"{path}: missing lookup model header")
            for lineno, line in enumerate(fh, 2):
                line = line.rstrip("\n")
                if not line:
                    continue
                fields = line.split("\t")
                if len(fields) != 4:
                    raise FormatError(f"{path}:{lineno}: expected 4 fields")
                kind, key_s, tag, count_s = fields
                try:
                    count = int(count_s)
                except ValueError as exc:
                    raise FormatError(f"{path}:{lineno}: bad count") from exc
                parse(tag)
                if kind == "trigram":
                    model.trigram[tuple(key_s.split(_SEP))] = (tag, count)
                elif kind == "unigram":
                    model.unigram[key_s] = (tag, count)
                else:
                    raise FormatError(f"{path}:{lineno}: unknown context kind {kind!r}")
        return model


def lookup_train(sentences, compressed=True):
    """Fill the backoff maps from subword-granularity tagged sentences."""
    tri_counts = defaultdict(Counter)
    uni_counts = defaultdict(Counter)
    for sent in sentences:
        if sent.granularity != "subword":
            raise ValidationError("lookup training requires subword-granularity tags")
        surfaces = _marked_surfaces(sent)
        for i, unit in enumerate(sent.units):
            tag = serialize(unit.ops)
            tri, uni = _context_keys(surfaces, i)
            tri_counts[tri][tag] += 1
            uni_counts[uni][tag] += 1
    model = LookupModel(compressed=compressed)
    for table, counts in ((model.trigram, tri_counts), (model.unigram, uni_counts)):
        for key, ctr in counts.items():
            best = min(ctr.items(), key=lambda kv: (-kv[1], kv[0]))
            table[key] = best
    return model


def lookup_tag(model, src, subword_vocab):
    """Segment src and predict one tag per subword."""
    units = []
    for w, token in enumerate(src):
        for s, e in subword_vocab.segment(token):
            units.append(TagUnit(token[s:e], w, ()))
    surfaces = _marked_surfaces(TaggedSentence(units, "subword", False))
    tagged_units = []
    for i, unit in enumerate(units):
        tag = model.predict(surfaces, i)
        tagged_units.append(TagUnit(unit.surface, unit.word_index, parse(tag)))
    return TaggedSentence(tagged_units, "subword", model.compressed)


@dataclass
class InferenceConfig:
    iterations: int = 1
    pnx_tagger: object = None  # cascade: run after the main phase, once

    def __post_init__(self):
        if self.iterations < 1:
            raise ValidationError("iterations must be >= 1")


def infer(src, tagger, cfg=None):
    """Run tagger + apply for cfg.iterations rounds, stopping at a fixpoint;
    with a cascade, the punctuation tagger runs once afterwards."""
    cfg = cfg or InferenceConfig()
    cur = list(src)
    for rnd in range(cfg.iterations):
        try:
            tagged = tagger(cur)
            new = apply_tags(cur, tagged)
        except (TagError, ValidationError) as exc:
            raise ValidationError(f"round {rnd + 1}: {exc}") from exc
        if new == cur:
            break
        cur = new
    if cfg.pnx_tagger is not None:
        try:
            tagged = cfg.pnx_tagger(cur)
            cur = apply_tags(cur, tagged)
        except (TagError, ValidationError) as exc:
            raise ValidationError(f"punctuation round: {exc}") from exc
    return cur


def _overlaps(a, b):
    if a.start == a.end:
        if b.start == b.end:
            return a.start == b.start
        return b.start < a.start < b.end
    if b.start == b.end:
        return a.start < b.start < a.end
    return a.start < b.end and b.start < a.end


def ensemble(src, hypotheses, min_votes=None):
    """Edit-level majority vote: keep an edit iff at least min_votes systems
    (default k - 1) propose the identical (span, replacement)."""
    k = len(hypotheses)
    if k < 2:
        raise ValidationError("ensembling requires at least 2 hypotheses")
    if min_votes is None:
        min_votes = k - 1
    votes = Counter()
    for hyp in hypotheses:
        for edit in span_edits(src, hyp):
            votes[edit] += 1
    survivors = [e for e, v in votes.items() if v >= min_votes]
    survivors.sort(key=lambda e: (-votes[e], e.start, e.end, e.replacement))
    chosen = []
    for edit in survivors:
        if not any(_overlaps(edit, c) for c in chosen):
            chosen.append(edit)
    return apply_span_edits(src, chosen)
