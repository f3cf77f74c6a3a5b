#!/usr/bin/env python3
"""Compare the compiled alignment kernels against the pure-Python fallback.

The character-level Levenshtein DP dominates end-to-end extraction time
(every token pair in the word-alignment cost matrix runs one), which is why
the kernels live in a compiled extension at all. Run from the repo root:

    python3 benchmarks/bench_kernels.py [--pairs N]

Forcing the fallback for a full run instead: EDITGEC_PURE=1 pytest ...
"""

import argparse
import time

from editgec.kernels import _speedups_available, fallback
from editgec.synth import make_corpus


def _bench(mod, srcs, tgts):
    start = time.perf_counter()
    total = 0.0
    for src, tgt in zip(srcs, tgts):
        m = mod.norm_distance_matrix(src, tgt)
        total += float(m.sum())
        for s, t in zip(src, tgt):
            mod.align(s, t)
    return time.perf_counter() - start, total


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=2000)
    args = ap.parse_args()

    srcs, tgts = make_corpus(args.pairs, seed=42)
    pure_t, pure_sum = _bench(fallback, srcs, tgts)
    print(f"pure      {pure_t:8.3f}s  (checksum {pure_sum:.3f})")
    if _speedups_available():
        from editgec.kernels import _speedups

        comp_t, comp_sum = _bench(_speedups, srcs, tgts)
        print(f"compiled  {comp_t:8.3f}s  (checksum {comp_sum:.3f})")
        assert abs(pure_sum - comp_sum) < 1e-9, "backends disagree"
        print(f"speedup   {pure_t / comp_t:8.1f}x")
    else:
        print("compiled  unavailable (extension not built)")


if __name__ == "__main__":
    main()
