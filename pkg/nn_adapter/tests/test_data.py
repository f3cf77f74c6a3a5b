import pytest
import torch

pytest.importorskip("nn_adapter.suite")

from nn_adapter.data import (
    InputVocab,
    LabelSet,
    TrainingDataError,
    encode_batch,
    validate_labels,
)
from nn_adapter.tagfile import Unit
from nn_adapter.tokenizer import SubwordTokenizer


def test_label_set_requires_keep_tag(tmp_path):
    path = tmp_path / "v.tsv"
    path.write_text("K*\t10\nK*R_[x]\t3\n")
    labels = LabelSet.from_file(path)
    assert "K*" in labels and len(labels) == 2

    path.write_text("K*R_[x]\t3\n")
    with pytest.raises(TrainingDataError, match="keep tag"):
        LabelSet.from_file(path)


def test_validate_labels():
    labels = LabelSet(["K*", "D*"])
    good = [[Unit("ab", 0, "K*"), Unit("cd", 1, "D*")]]
    validate_labels(good, labels)
    with pytest.raises(TrainingDataError, match="not in the label set"):
        validate_labels([[Unit("ab", 0, "K*R_[x]")]], labels)


def test_encode_batch_padding_and_truncation():
    labels = LabelSet(["K*", "D*"])
    vocab = InputVocab(["aa", "bb"])
    batch = [
        [Unit("aa", 0, "K*")],
        [Unit("bb", 0, "D*"), Unit("zz", 1, "K*"), Unit("aa", 2, "K*")],
    ]
    with pytest.warns(UserWarning, match="truncated"):
        inputs, targets = encode_batch(batch, vocab, labels, max_len=2)
    assert inputs.shape == (2, 2)
    assert inputs[0, 1] == 0  # pad
    assert targets[0, 1] == -100
    assert inputs[1, 1] == 1  # "zz" is unknown
    assert torch.equal(targets[1], torch.tensor([1, 0]))


def test_tokenizer_greedy_longest_match(tmp_path):
    path = tmp_path / "sw.txt"
    path.write_text("abc\nab\n##cd\n##c\n")
    tok = SubwordTokenizer.from_file(path)
    assert tok.segment("abc") == ["abc"]
    assert tok.segment("abcc") == ["abc", "c"]
    assert tok.segment("abccd") == ["abc", "cd"]
    # Greedy, no backtracking: "abc" first, then "d" dead-ends, so the whole
    # token stays intact as one unknown subword (same as the extractor side).
    assert tok.segment("abcd") == ["abcd"]
    assert tok.segment("xyz") == ["xyz"]
    assert tok.entries() == ["ab", "abc", "##c", "##cd"]
