"""Inference: tag a whitespace-tokenized source corpus, one tag per subword.

Word-level output uses the representation of the first subword of each word:
the word's tag is the prediction at its first subword position.
"""

import warnings

import torch

from .data import KEEP_TAG, InputVocab, LabelSet, encode_batch
from .model import ENCODERS, TokenTagger
from .tagfile import Unit, write_tag_file
from .tokenizer import SubwordTokenizer

# The eval-mode encoder fast path goes through prototype nested tensors.
warnings.filterwarnings(
    "ignore", message="The PyTorch API of nested tensors is in prototype stage"
)


def load_checkpoint(path):
    """Returns (model, vocab, labels, tokenizer, compressed, spec_dict)."""
    ckpt = torch.load(path, weights_only=False)
    labels = LabelSet(ckpt["labels"])
    vocab = InputVocab()
    vocab.index = dict(ckpt["input_index"])
    tokenizer = SubwordTokenizer(ckpt["tokenizer_entries"])
    spec = ckpt["spec"]
    model = TokenTagger(len(vocab), len(labels), spec["max_len"],
                        ENCODERS[spec["encoder"]])
    model.load_state_dict(ckpt["state_dict"])
    model.eval()
    return model, vocab, labels, tokenizer, ckpt["compressed"], spec


def _segment_sentence(tokens, tokenizer):
    units = []
    for w, token in enumerate(tokens):
        for piece in tokenizer.segment(token):
            units.append(Unit(piece, w, None))
    return units


def tag_sentences(model, vocab, labels, tokenizer, token_sentences,
                  max_len=512, granularity="subword", batch_size=64):
    out = []
    with torch.no_grad():
        for start in range(0, len(token_sentences), batch_size):
            batch_tokens = token_sentences[start:start + batch_size]
            batch = [_segment_sentence(t, tokenizer) for t in batch_tokens]
            inputs, _ = encode_batch(batch, vocab, None, max_len)
            pred = model(inputs).argmax(dim=-1)
            for row, (units, tokens) in enumerate(zip(batch, batch_tokens)):
                tags = [
                    labels.labels[int(pred[row, j])]
                    for j in range(min(len(units), inputs.shape[1]))
                ]
                tags += [KEEP_TAG] * (len(units) - len(tags))  # truncated tail keeps
                if granularity == "subword":
                    out.append([
                        Unit(u.surface, u.word_index, t)
                        for u, t in zip(units, tags)
                    ])
                else:
                    sent = []
                    seen = set()
                    for u, t in zip(units, tags):
                        if u.word_index in seen:
                            continue
                        seen.add(u.word_index)
                        sent.append(Unit(tokens[u.word_index], u.word_index, t))
                    out.append(sent)
    return out


def write_predictions(model, vocab, labels, tokenizer, compressed, src_file,
                      out_path, max_len=512, granularity="subword"):
    with open(src_file, encoding="utf-8") as fh:
        token_sentences = [line.split() for line in fh.read().splitlines()]
    sentences = tag_sentences(model, vocab, labels, tokenizer, token_sentences,
                              max_len=max_len, granularity=granularity)
    write_tag_file(out_path, sentences, granularity, compressed)


def predict_file(checkpoint, src_file, out_path, granularity="subword",
                 tokenizer_file=None):
    """Tag src_file with a saved checkpoint, writing a tag file.

    A tokenizer file, if given, must match the one stored at training time.
    """
    model, vocab, labels, tokenizer, compressed, spec = load_checkpoint(checkpoint)
    if tokenizer_file is not None:
        external = SubwordTokenizer.from_file(tokenizer_file)
        if external.entries() != tokenizer.entries():
            raise ValueError(
                f"tokenizer/vocabulary mismatch: {tokenizer_file} differs "
                f"from the vocabulary stored in {checkpoint}"
            )
    write_predictions(model, vocab, labels, tokenizer, compressed, src_file,
                      out_path, max_len=spec["max_len"], granularity=granularity)
