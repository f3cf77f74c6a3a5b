"""Seeded synthetic parallel corpora for tests, benchmarks, and demos.

Clean sentences mix Arabic and Latin tokens with occasional punctuation;
the erroneous side is derived by injecting character noise, token merges,
splits, insertions, deletions, and punctuation noise.
"""

import random
from collections import Counter

from .textcore import SubwordVocab

ARABIC_WORDS = [
    "يجب", "الاهتمام", "بالصحة", "وخصوصا", "الصحة", "النفسية", "كتاب",
    "مدرسة", "قلم", "بيت", "شمس", "قمر", "بحر", "جبل", "ولد", "بنت",
    "كبير", "صغير", "جميل", "سريع", "يكتب", "يقرأ", "يذهب", "يأتي",
]
LATIN_WORDS = [
    "the", "quick", "brown", "fox", "jumps", "over", "lazy", "dog",
    "health", "matters", "every", "single", "day", "care", "about",
    "people", "write", "read", "learn", "grow", "small", "large",
]
PUNCT_TOKENS = [".", "،", "؟", "!", ","]
ARABIC_CHARS = "ابتثجحخدذرزسشصضطظعغفقكلمنهويةىءإأ"
LATIN_CHARS = "abcdefghijklmnopqrstuvwxyz"


def _char_pool(token):
    return ARABIC_CHARS if token[0] in ARABIC_CHARS + "ةىءإأ" else LATIN_CHARS


def _corrupt_token(token, rng):
    pool = _char_pool(token) if token else LATIN_CHARS
    i = rng.randrange(len(token)) if token else 0
    kind = rng.random()
    if kind < 0.4 and len(token) > 1:  # delete a char
        return token[:i] + token[i + 1:]
    if kind < 0.7:  # substitute
        return token[:i] + rng.choice(pool) + token[i + 1:]
    return token[:i] + rng.choice(pool) + token[i:]  # insert


def _clean_sentence(rng, min_tokens=4, max_tokens=10):
    n = rng.randint(min_tokens, max_tokens)
    tokens = []
    for _ in range(n):
        lex = ARABIC_WORDS if rng.random() < 0.6 else LATIN_WORDS
        tokens.append(rng.choice(lex))
    if rng.random() < 0.6:
        tokens.append(rng.choice(PUNCT_TOKENS))
    return tokens


def _corrupt_sentence(clean, rng):
    src = list(clean)
    n_edits = rng.randint(0, 4)
    for _ in range(n_edits):
        if not src:
            break
        move = rng.random()
        i = rng.randrange(len(src))
        if move < 0.45:  # character noise
            tok = _corrupt_token(src[i], rng)
            if tok:
                src[i] = tok
            else:
                del src[i]
        elif move < 0.60 and len(src) > 1 and i + 1 < len(src):  # merge
            src[i:i + 2] = [src[i] + src[i + 1]]
        elif move < 0.72 and len(src[i]) > 2:  # split
            cut = rng.randint(1, len(src[i]) - 1)
            src[i:i + 1] = [src[i][:cut], src[i][cut:]]
        elif move < 0.82 and len(src) > 1:  # drop a token
            del src[i]
        elif move < 0.92:  # spurious token
            lex = ARABIC_WORDS if rng.random() < 0.5 else LATIN_WORDS
            src.insert(i, rng.choice(lex))
        else:  # punctuation noise
            if src[i] in PUNCT_TOKENS:
                if rng.random() < 0.5:
                    del src[i]
                else:
                    src[i] = rng.choice(PUNCT_TOKENS)
            elif rng.random() < 0.5:
                src.insert(i, rng.choice(PUNCT_TOKENS))
            else:
                src[i] = src[i] + rng.choice(".,،")
    if not src:
        src = [rng.choice(LATIN_WORDS)]
    return src


def make_corpus(n_sentences, seed=42, min_tokens=4, max_tokens=10):
    """Returns (src_sentences, tgt_sentences) as lists of token lists."""
    rng = random.Random(seed)
    srcs, tgts = [], []
    for _ in range(n_sentences):
        tgt = _clean_sentence(rng, min_tokens, max_tokens)
        src = _corrupt_sentence(tgt, rng)
        srcs.append(src)
        tgts.append(tgt)
    return srcs, tgts


def write_corpus(srcs, tgts, src_path, tgt_path):
    with open(src_path, "w", encoding="utf-8") as fh:
        for s in srcs:
            fh.write(" ".join(s) + "\n")
    with open(tgt_path, "w", encoding="utf-8") as fh:
        for t in tgts:
            fh.write(" ".join(t) + "\n")


def build_subword_vocab(sentences, limit=400):
    """Frequency-based vocabulary: all single characters plus the most
    frequent multi-character prefixes and continuations."""
    vocab = SubwordVocab()
    counts = Counter()
    for sent in sentences:
        for token in sent:
            for c in token:
                vocab.add(c)
                vocab.add("##" + c)
            for k in range(2, 5):
                if len(token) >= k:
                    counts[token[:k]] += 1
                for j in range(1, len(token) - k + 1):
                    counts["##" + token[j:j + k]] += 1
    for entry, _ in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:limit]:
        vocab.add(entry)
    return vocab
