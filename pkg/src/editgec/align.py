"""Word-level sentence alignment with merge refinement, plus char alignment.

Word alignment is a token-level DP where substituting token a for token b
costs their character Levenshtein distance normalized by the longer length,
and inserting/deleting a token costs 1. Refinement then greedily merges
adjacent alignment units whenever the merged unit (strings joined with a
single space) is cheaper, which is what turns token splits/merges into
single multi-token units.
"""

from dataclasses import dataclass

from . import kernels


@dataclass(frozen=True)
class AlignmentPair:
    src_start: int
    src_end: int
    tgt_start: int
    tgt_end: int
    cost: float

    def src_text(self, src):
        return " ".join(src[self.src_start:self.src_end])

    def tgt_text(self, tgt):
        return " ".join(tgt[self.tgt_start:self.tgt_end])


@dataclass
class SentenceAlignment:
    src: list
    tgt: list
    pairs: list

    def total_cost(self):
        return sum(p.cost for p in self.pairs)


def _pair_cost(src_text, tgt_text):
    if not src_text or not tgt_text:
        return 1.0
    return kernels.norm_distance(src_text, tgt_text)


def word_align(src, tgt):
    """Token-level DP alignment producing 1-1 / 1-0 / 0-1 pairs.

    Ties prefer substitution, then deletion, then insertion.
    """
    n, m = len(src), len(tgt)
    sub = kernels.norm_distance_matrix(src, tgt)
    dp = [[0.0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        dp[i][0] = float(i)
    for j in range(1, m + 1):
        dp[0][j] = float(j)
    for i in range(1, n + 1):
        row = dp[i]
        prev = dp[i - 1]
        srow = sub[i - 1]
        for j in range(1, m + 1):
            best = prev[j - 1] + srow[j - 1]
            t = prev[j] + 1.0
            if t < best:
                best = t
            t = row[j - 1] + 1.0
            if t < best:
                best = t
            row[j] = best
    pairs = []
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0 and dp[i][j] == dp[i - 1][j - 1] + sub[i - 1][j - 1]:
            pairs.append(AlignmentPair(i - 1, i, j - 1, j, float(sub[i - 1][j - 1])))
            i -= 1
            j -= 1
        elif i > 0 and dp[i][j] == dp[i - 1][j] + 1.0:
            pairs.append(AlignmentPair(i - 1, i, j, j, 1.0))
            i -= 1
        else:
            pairs.append(AlignmentPair(i, i, j - 1, j, 1.0))
            j -= 1
    pairs.reverse()
    return SentenceAlignment(src, tgt, pairs)


def refine_alignment(alignment):
    """Greedy leftmost-first merging of adjacent pairs.

    A merge is applied when the merged pair's cost (normalized char
    Levenshtein of the space-joined span strings) is strictly below the sum
    of the two pairs' costs. Exact (zero-cost) pairs never participate:
    without that guard the length normalization makes it profitable to fold
    clean words into any neighboring edit, which destroys per-word alignment
    granularity. Scans repeat until a full pass makes no change; the scan
    count is capped to guarantee termination.
    """
    src, tgt = alignment.src, alignment.tgt
    pairs = list(alignment.pairs)
    max_scans = 10 * (len(src) + len(tgt)) + 1
    for _ in range(max_scans):
        improved = False
        for idx in range(len(pairs) - 1):
            a, b = pairs[idx], pairs[idx + 1]
            if a.cost == 0.0 or b.cost == 0.0:
                continue
            merged_src = " ".join(src[a.src_start:b.src_end])
            merged_tgt = " ".join(tgt[a.tgt_start:b.tgt_end])
            cost = _pair_cost(merged_src, merged_tgt)
            if cost < a.cost + b.cost:
                pairs[idx:idx + 2] = [
                    AlignmentPair(a.src_start, b.src_end, a.tgt_start, b.tgt_end, cost)
                ]
                improved = True
                break
        if not improved:
            break
    return SentenceAlignment(src, tgt, pairs)


def char_align(src_text, tgt_text):
    """Character alignment steps for one materialized pair.

    Steps are ('K', c), ('D', c), ('I', c), ('R', c_src, c_tgt); ties prefer
    replace over delete over insert.
    """
    return kernels.char_align_steps(src_text, tgt_text)
