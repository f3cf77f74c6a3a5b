"""Label sets, input vocabulary, and tensor encoding for tag files."""

import warnings

import torch

KEEP_TAG = "K*"
PAD_ID = 0
UNK_ID = 1


class TrainingDataError(Exception):
    pass


class LabelSet:
    """Ordered label inventory read from the shared edit-vocabulary TSV.

    The file lists tag<TAB>count rows; the tags are opaque here. The keep
    tag must be present — it is the fallback the downstream applier relies
    on — and label ids follow file order so checkpoints stay stable.
    """

    def __init__(self, labels):
        self.labels = list(labels)
        if KEEP_TAG not in self.labels:
            raise TrainingDataError(f"label set must contain the keep tag {KEEP_TAG!r}")
        self.index = {label: i for i, label in enumerate(self.labels)}

    @classmethod
    def from_file(cls, path):
        labels = []
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                if not line:
                    continue
                fields = line.split("\t")
                if len(fields) != 2:
                    raise TrainingDataError(f"{path}:{lineno}: expected tag<TAB>count")
                labels.append(fields[0])
        return cls(labels)

    def __len__(self):
        return len(self.labels)

    def __contains__(self, tag):
        return tag in self.index


class InputVocab:
    def __init__(self, tokens=()):
        self.index = {"<pad>": PAD_ID, "<unk>": UNK_ID}
        for tok in tokens:
            self.index.setdefault(tok, len(self.index))

    def __len__(self):
        return len(self.index)

    def encode(self, surface):
        return self.index.get(surface, UNK_ID)


def validate_labels(sentences, labels, where="training data"):
    """Every tag in the tag-file sentences must be a known label."""
    for i, units in enumerate(sentences):
        for u in units:
            if u.tag not in labels:
                raise TrainingDataError(
                    f"{where}: sentence {i}: tag {u.tag!r} not in the label set"
                )


def encode_batch(batch, vocab, labels, max_len):
    """Pad one batch of tag-file sentences to (inputs, targets) tensors.

    Targets are -100 at padding so the loss ignores them. Sentences longer
    than max_len are truncated with a warning.
    """
    rows = []
    for units in batch:
        if len(units) > max_len:
            warnings.warn(
                f"sentence of {len(units)} subwords truncated to {max_len}"
            )
            units = units[:max_len]
        rows.append(units)
    width = max((len(r) for r in rows), default=1) or 1
    inputs = torch.full((len(rows), width), PAD_ID, dtype=torch.long)
    targets = torch.full((len(rows), width), -100, dtype=torch.long)
    for i, units in enumerate(rows):
        for j, u in enumerate(units):
            inputs[i, j] = vocab.encode(u.surface)
            if labels is not None:
                targets[i, j] = labels.index[u.tag]
    return inputs, targets
