"""Edit vocabularies: construction, pruning, coverage statistics."""

from collections import Counter
from dataclasses import dataclass, field

from .errors import FormatError
from .tags import KEEP_TAG, TaggedSentence, TagUnit, parse


class EditVocabulary:
    """Map from serialized edit tag to training frequency.

    The designated keep tag (K*) is always present and never pruned.
    """

    def __init__(self, entries=None):
        self.entries = dict(entries) if entries else {}
        self.entries.setdefault(KEEP_TAG, 1)

    def __contains__(self, tag):
        return tag in self.entries

    def __len__(self):
        return len(self.entries)

    def rewrite(self, tag):
        return tag if tag in self.entries else KEEP_TAG

    def prune(self, threshold):
        if threshold <= 0:
            return EditVocabulary(self.entries)
        kept = {t: c for t, c in self.entries.items() if c >= threshold or t == KEEP_TAG}
        return EditVocabulary(kept)

    def save(self, path):
        rows = sorted(self.entries.items(), key=lambda kv: (-kv[1], kv[0]))
        with open(path, "w", encoding="utf-8") as fh:
            for tag, count in rows:
                fh.write(f"{tag}\t{count}\n")

    @classmethod
    def load(cls, path):
        entries = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                if not line:
                    continue
                fields = line.split("\t")
                if len(fields) != 2:
                    raise FormatError(f"{path}:{lineno}: expected tag<TAB>count")
                parse(fields[0])  # validates the tag grammar
                try:
                    count = int(fields[1])
                except ValueError as exc:
                    raise FormatError(f"{path}:{lineno}: bad count {fields[1]!r}") from exc
                if count < 1:
                    raise FormatError(f"{path}:{lineno}: frequency must be >= 1")
                entries[fields[0]] = count
        return cls(entries)


def build_vocab(serialized_tags):
    """Count serialized tags from a stream."""
    counts = Counter(serialized_tags)
    counts.setdefault(KEEP_TAG, 1)
    return EditVocabulary(counts)


def vocab_from_sentences(sentences):
    return build_vocab(t for s in sentences for t in s.tags())


@dataclass
class CoverageReport:
    unique_edits: int
    dev_units: int
    oov_units: int
    oracle_sentences: list = field(default_factory=list)

    @property
    def oov_pct(self):
        if self.dev_units == 0:
            return 0.0
        return 100.0 * self.oov_units / self.dev_units


def coverage_stats(train_vocab, dev_sentences):
    """Unique-edit count, dev OOV%, and the oracle-input tagged sentences
    (OOV tags replaced by the keep tag)."""
    dev_units = 0
    oov_units = 0
    oracle = []
    keep_ops = parse(KEEP_TAG)
    for sent in dev_sentences:
        units = []
        for unit in sent.units:
            dev_units += 1
            from .tags import serialize

            tag = serialize(unit.ops)
            if tag in train_vocab:
                units.append(unit)
            else:
                oov_units += 1
                units.append(TagUnit(unit.surface, unit.word_index, keep_ops))
        oracle.append(TaggedSentence(units, sent.granularity, sent.compressed))
    return CoverageReport(len(train_vocab), dev_units, oov_units, oracle)
