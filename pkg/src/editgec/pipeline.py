"""Corpus-level pipeline: streams sentence pairs through extraction,
optional segregation, compression, and prune-rewriting.

Extraction is pure per pair, so it can be sharded across workers; results
are reassembled in input order, and the selector/vocabulary reductions run
over that deterministic sequence, so output is byte-identical at any
worker count.
"""

import multiprocessing as mp

from .errors import FormatError, ValidationError
from .extract import compress_sentence, extract_edits, segregate
from .tags import (
    KEEP_TAG,
    CompressionSelector,
    TaggedSentence,
    TagUnit,
    parse,
    serialize,
)
from .textcore import DEFAULT_PUNCT, SubwordVocab, tokenize
from .vocab import build_vocab

_WORKER_STATE = {}


def _init_worker(vocab_entries, granularity, mode, punct):
    _WORKER_STATE["vocab"] = _restore_vocab(vocab_entries)
    _WORKER_STATE["granularity"] = granularity
    _WORKER_STATE["mode"] = mode
    _WORKER_STATE["punct"] = punct


def _restore_vocab(entries):
    if entries is None:
        return None
    v = SubwordVocab()
    v.initial, v.continuation = entries
    return v


def _segment_all(vocab, tokens):
    return [vocab.segment(t) for t in tokens]


def _extract_one(src, tgt, granularity, vocab, mode, punct):
    seg = _segment_all(vocab, src) if granularity == "subword" else None
    tagged = extract_edits(src, tgt, granularity=granularity, seg=seg)
    if mode == "all":
        return tagged
    seg_fn = (lambda toks: _segment_all(vocab, toks)) if granularity == "subword" else None
    nopnx, _, pnx = segregate(tagged, src, tgt, punct=punct, seg_fn=seg_fn)
    return nopnx if mode == "nopnx" else pnx


def _worker(pair):
    src, tgt = pair
    return _extract_one(
        src,
        tgt,
        _WORKER_STATE["granularity"],
        _WORKER_STATE["vocab"],
        _WORKER_STATE["mode"],
        _WORKER_STATE["punct"],
    )


def read_parallel_corpora(file_pairs, upsample=None):
    """Read line-aligned corpora; each corpus may be repeated (upsampled)."""
    upsample = upsample or [1] * len(file_pairs)
    if len(upsample) != len(file_pairs):
        raise ValidationError("one upsample factor per corpus pair required")
    srcs, tgts = [], []
    for (src_path, tgt_path), factor in zip(file_pairs, upsample):
        if factor < 1:
            raise ValidationError(f"upsample factor must be >= 1, got {factor}")
        with open(src_path, encoding="utf-8") as fh:
            src_lines = [tokenize(line) for line in fh.read().splitlines()]
        with open(tgt_path, encoding="utf-8") as fh:
            tgt_lines = [tokenize(line) for line in fh.read().splitlines()]
        if len(src_lines) != len(tgt_lines):
            raise FormatError(
                f"line count mismatch: {src_path} has {len(src_lines)}, "
                f"{tgt_path} has {len(tgt_lines)}"
            )
        for _ in range(factor):
            srcs.extend(src_lines)
            tgts.extend(tgt_lines)
    return srcs, tgts


def extract_corpus(srcs, tgts, granularity="word", subword_vocab=None,
                   compress=False, mode="all", prune_threshold=0,
                   selector=None, punct=DEFAULT_PUNCT, workers=1):
    """Full training-data emission for one corpus.

    Returns (sentences, vocabulary, selector). The vocabulary reflects the
    emitted representation before prune-rewriting; with a threshold, emitted
    tags outside the pruned vocabulary are rewritten to the keep tag.
    """
    if granularity == "subword" and subword_vocab is None:
        raise ValidationError("subword granularity requires a subword vocabulary")
    if mode not in ("all", "nopnx", "pnx"):
        raise ValidationError(f"unknown segregation mode {mode!r}")

    pairs = list(zip(srcs, tgts))
    if workers > 1 and len(pairs) > 1:
        entries = None
        if subword_vocab is not None:
            entries = (subword_vocab.initial, subword_vocab.continuation)
        with mp.Pool(
            workers, initializer=_init_worker,
            initargs=(entries, granularity, mode, punct),
        ) as pool:
            sentences = list(pool.imap(_worker, pairs, chunksize=64))
    else:
        sentences = [
            _extract_one(s, t, granularity, subword_vocab, mode, punct)
            for s, t in pairs
        ]

    if compress:
        if selector is None:
            selector = CompressionSelector()
            for sent in sentences:
                for unit in sent.units:
                    selector.observe(unit.ops)
        sentences = [compress_sentence(s, selector) for s in sentences]

    vocabulary = build_vocab(t for s in sentences for t in s.tags())
    if prune_threshold > 0:
        pruned = vocabulary.prune(prune_threshold)
        keep_ops = parse(KEEP_TAG)
        rewritten = []
        for sent in sentences:
            units = [
                u if serialize(u.ops) in pruned
                else TagUnit(u.surface, u.word_index, keep_ops)
                for u in sent.units
            ]
            rewritten.append(TaggedSentence(units, sent.granularity, sent.compressed))
        sentences = rewritten
        vocabulary = pruned
    return sentences, vocabulary, selector
