"""Fine-tuning loop with per-epoch checkpoint selection on dev F0.5."""

import random
from dataclasses import asdict, dataclass, field
from pathlib import Path

import torch

from .data import InputVocab, LabelSet, encode_batch, validate_labels
from .model import ENCODERS, TokenTagger
from .predict import write_predictions
from .tagfile import read_tag_file
from .tokenizer import SubwordTokenizer


@dataclass
class TrainSpec:
    """Training knobs. Defaults follow the reference fine-tuning recipe;

    the epoch count is a knob because some datasets are trained for 15
    epochs instead of 10. A from-scratch tiny encoder typically wants a
    larger learning rate than a pretrained one.
    """

    encoder: str = "tiny"
    learning_rate: float = 5e-5
    batch_size: int = 32
    epochs: int = 10
    max_len: int = 512
    seed: int = 42
    label_file: str = ""
    extra: dict = field(default_factory=dict)


def _batches(sentences, size, rng):
    order = list(range(len(sentences)))
    rng.shuffle(order)
    for start in range(0, len(order), size):
        yield [sentences[i] for i in order[start:start + size]]


def train(train_tags, spec, tokenizer_file, out_path, scorer=None, log=print):
    """Train on a subword tag file; returns (best_f05, history).

    When a scorer is given, every epoch's model predicts the scorer's dev
    source corpus and the checkpoint with the best dev F0.5 is kept;
    otherwise the final epoch is saved.
    """
    granularity, compressed, sentences = read_tag_file(train_tags)
    if granularity != "subword":
        raise ValueError(
            f"training tag file must be subword granularity, got {granularity}"
        )
    labels = LabelSet.from_file(spec.label_file)
    validate_labels(sentences, labels, where=str(train_tags))
    if spec.encoder not in ENCODERS:
        raise ValueError(f"unknown encoder {spec.encoder!r}")

    torch.manual_seed(spec.seed)
    rng = random.Random(spec.seed)
    vocab = InputVocab(u.surface for units in sentences for u in units)
    tokenizer = SubwordTokenizer.from_file(tokenizer_file)
    model = TokenTagger(len(vocab), len(labels), spec.max_len,
                        ENCODERS[spec.encoder])
    optim = torch.optim.AdamW(model.parameters(), lr=spec.learning_rate)
    loss_fn = torch.nn.CrossEntropyLoss(ignore_index=-100)

    checkpoint = {
        "labels": labels.labels,
        "input_index": vocab.index,
        "tokenizer_entries": tokenizer.entries(),
        "compressed": compressed,
        "spec": asdict(spec),
    }
    best = None
    history = []
    for epoch in range(1, spec.epochs + 1):
        model.train()
        total = 0.0
        for batch in _batches(sentences, spec.batch_size, rng):
            inputs, targets = encode_batch(batch, vocab, labels, spec.max_len)
            optim.zero_grad()
            logits = model(inputs)
            loss = loss_fn(logits.reshape(-1, len(labels)), targets.reshape(-1))
            loss.backward()
            optim.step()
            total += loss.item() * len(batch)
        avg = total / len(sentences)
        if scorer is None:
            history.append((epoch, avg, None))
            log(f"epoch {epoch}: loss {avg:.4f}")
            continue
        import tempfile

        with tempfile.TemporaryDirectory() as tmp:
            pred = Path(tmp) / "pred.tags"
            write_predictions(model, vocab, labels, tokenizer, compressed,
                              scorer.src_file, pred, max_len=spec.max_len)
            f05 = scorer.f05(pred)
        history.append((epoch, avg, f05))
        log(f"epoch {epoch}: loss {avg:.4f}  dev F0.5 {f05:.4f}")
        if best is None or f05 > best:
            best = f05
            checkpoint["state_dict"] = {
                k: v.clone() for k, v in model.state_dict().items()
            }
    if "state_dict" not in checkpoint:
        checkpoint["state_dict"] = model.state_dict()
    torch.save(checkpoint, out_path)
    return best, history
