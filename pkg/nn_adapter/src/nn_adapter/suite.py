"""Synthetic demo corpus with a long-range dependency.

Each sentence opens with a marker word that decides, several tokens later,
whether the single target word "zaqo" is corrected to "zaqu". A local-context
lookup cannot see the marker from the target position, so it can do no
better than playing the base rate; an attention model can. Used by the smoke
tests and handy for trying the trainer end to end.
"""

import random

FILLERS = ["kita", "lemo", "nadu", "pori", "selo", "tiwa"]
MARK_EDIT = "remba"      # target gets corrected
MARK_KEEP = "bluno"      # target stays as-is
TARGET = "zaqo"
FIXED = "zaqu"


def make_suite(n, seed=0, edit_rate=0.6):
    """n (src, tgt) token-list pairs; edit_rate of them open with MARK_EDIT."""
    rng = random.Random(seed)
    srcs, tgts = [], []
    for _ in range(n):
        marker = MARK_EDIT if rng.random() < edit_rate else MARK_KEEP
        head = [rng.choice(FILLERS) for _ in range(rng.randint(3, 6))]
        tail = [rng.choice(FILLERS) for _ in range(rng.randint(1, 3))]
        src = [marker] + head + [TARGET] + tail
        tgt = list(src)
        if marker == MARK_EDIT:
            tgt[len(head) + 1] = FIXED
        srcs.append(src)
        tgts.append(tgt)
    return srcs, tgts


def write_suite(srcs, tgts, src_path, tgt_path, subword_vocab_path=None):
    for path, sentences in ((src_path, srcs), (tgt_path, tgts)):
        with open(path, "w", encoding="utf-8") as fh:
            for s in sentences:
                fh.write(" ".join(s) + "\n")
    if subword_vocab_path:
        words = sorted({w for s in srcs + tgts for w in s})
        with open(subword_vocab_path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(words) + "\n")
