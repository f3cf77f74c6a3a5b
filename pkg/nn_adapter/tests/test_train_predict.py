"""Smoke tests for the training and prediction pipeline."""

import pytest

pytest.importorskip("nn_adapter.suite")

from nn_adapter.data import LabelSet, TrainingDataError
from nn_adapter.predict import predict_file
from nn_adapter.scorer import EditgecScorer
from nn_adapter.tagfile import read_tag_file
from nn_adapter.train import TrainSpec, train


@pytest.fixture(scope="module")
def smoke_checkpoint(workdir, tmp_path_factory):
    """The reference smoke config: 2 epochs, tiny encoder, a small corpus."""
    out = tmp_path_factory.mktemp("ckpt") / "model.pt"
    spec = TrainSpec(epochs=2, learning_rate=2e-3, seed=42,
                     label_file=str(workdir / "vocab.tsv"))
    scorer = EditgecScorer(workdir / "dev.src", workdir / "dev.tgt")
    best, history = train(workdir / "train.tags", spec, workdir / "sw.txt",
                          out, scorer=scorer, log=lambda *_: None)
    assert out.exists()
    assert len(history) == 2
    assert best == max(h[2] for h in history)
    return out


def test_training_finishes_and_selects_checkpoint(smoke_checkpoint):
    assert smoke_checkpoint.exists()


def test_predictions_validate_downstream(smoke_checkpoint, workdir, tmp_path, editgec):
    pred = tmp_path / "pred.tags"
    predict_file(smoke_checkpoint, workdir / "dev.src", pred,
                 tokenizer_file=workdir / "sw.txt")
    gran, compressed, sentences = read_tag_file(pred)
    assert (gran, compressed) == ("subword", True)
    assert len(sentences) == 80
    labels = set(LabelSet.from_file(workdir / "vocab.tsv").labels)
    assert {u.tag for s in sentences for u in s} <= labels
    # The applier on the other side of the file boundary accepts it.
    editgec("apply", str(workdir / "dev.src"), str(pred),
            "-o", str(tmp_path / "hyp.txt"))


def test_word_granularity_uses_first_subword(smoke_checkpoint, workdir, tmp_path, editgec):
    pred = tmp_path / "pred_word.tags"
    predict_file(smoke_checkpoint, workdir / "dev.src", pred,
                 granularity="word")
    gran, _, sentences = read_tag_file(pred)
    assert gran == "word"
    with open(workdir / "dev.src", encoding="utf-8") as fh:
        first = fh.readline().split()
    assert [u.surface for u in sentences[0]] == first
    assert [u.word_index for u in sentences[0]] == list(range(len(first)))
    editgec("apply", str(workdir / "dev.src"), str(pred),
            "-o", str(tmp_path / "hyp.txt"))


def test_tokenizer_mismatch_rejected(smoke_checkpoint, workdir, tmp_path):
    other = tmp_path / "other.txt"
    other.write_text("completelydifferent\n")
    with pytest.raises(ValueError, match="tokenizer/vocabulary mismatch"):
        predict_file(smoke_checkpoint, workdir / "dev.src",
                     tmp_path / "p.tags", tokenizer_file=other)


def test_unknown_label_rejected(workdir, tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("K*\t10\n")  # training data contains K*R_[u] too
    spec = TrainSpec(epochs=1, label_file=str(bad))
    with pytest.raises(TrainingDataError, match="not in the label set"):
        train(workdir / "train.tags", spec, workdir / "sw.txt",
              tmp_path / "m.pt")


def test_word_granularity_training_rejected(workdir, tmp_path, editgec):
    editgec("extract", str(workdir / "train.src"), str(workdir / "train.tgt"),
            "-o", str(tmp_path / "word.tags"), "--granularity", "word",
            "--compress", "--vocab-out", str(tmp_path / "wv.tsv"))
    spec = TrainSpec(epochs=1, label_file=str(tmp_path / "wv.tsv"))
    with pytest.raises(ValueError, match="subword granularity"):
        train(tmp_path / "word.tags", spec, workdir / "sw.txt",
              tmp_path / "m.pt")
