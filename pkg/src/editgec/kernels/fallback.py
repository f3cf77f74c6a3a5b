"""Pure-Python Levenshtein kernels.

Used when the compiled extension is unavailable (or EDITGEC_PURE is set).
Semantics must stay bit-identical to kernels._speedups: same costs, same
tie-breaking (insert over delete over diagonal in the backtrace, which puts
tied insertions after replacements in the forward step order).
"""

import numpy as np

BACKEND = "pure"


def distance(a, b):
    """Unit-cost Levenshtein distance between two strings."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    prev = list(range(lb + 1))
    cur = [0] * (lb + 1)
    for i in range(1, la + 1):
        ca = a[i - 1]
        cur[0] = i
        for j in range(1, lb + 1):
            cost = 0 if ca == b[j - 1] else 1
            best = prev[j - 1] + cost
            t = prev[j] + 1
            if t < best:
                best = t
            t = cur[j - 1] + 1
            if t < best:
                best = t
            cur[j] = best
        prev, cur = cur, prev
    return prev[lb]


def norm_distance(a, b):
    """distance(a, b) divided by the longer length; 0.0 for two empties."""
    if a == b:
        return 0.0
    m = max(len(a), len(b))
    if m == 0:
        return 0.0
    return distance(a, b) / m


def norm_distance_matrix(src_tokens, tgt_tokens):
    """Normalized distances between every (src token, tgt token) pair."""
    out = np.empty((len(src_tokens), len(tgt_tokens)), dtype=np.float64)
    for i, s in enumerate(src_tokens):
        for j, t in enumerate(tgt_tokens):
            out[i, j] = norm_distance(s, t)
    return out


def align(a, b):
    """Minimal unit-cost character alignment of a onto b.

    Returns a list of steps: ('K', c), ('D', c), ('I', c), ('R', c_src, c_tgt).
    At tie points the forward order prefers replace, then delete, then
    insert, so tied insertions trail (the backtrace therefore tries insert
    first, then delete, then the diagonal).
    """
    la, lb = len(a), len(b)
    dp = [[0] * (lb + 1) for _ in range(la + 1)]
    for i in range(1, la + 1):
        dp[i][0] = i
    for j in range(1, lb + 1):
        dp[0][j] = j
    for i in range(1, la + 1):
        ca = a[i - 1]
        row = dp[i]
        prev = dp[i - 1]
        for j in range(1, lb + 1):
            cost = 0 if ca == b[j - 1] else 1
            best = prev[j - 1] + cost
            t = prev[j] + 1
            if t < best:
                best = t
            t = row[j - 1] + 1
            if t < best:
                best = t
            row[j] = best
    steps = []
    i, j = la, lb
    while i > 0 or j > 0:
        if j > 0 and dp[i][j] == dp[i][j - 1] + 1:
            steps.append(("I", b[j - 1]))
            j -= 1
            continue
        if i > 0 and dp[i][j] == dp[i - 1][j] + 1:
            steps.append(("D", a[i - 1]))
            i -= 1
            continue
        if a[i - 1] == b[j - 1]:
            steps.append(("K", a[i - 1]))
        else:
            steps.append(("R", a[i - 1], b[j - 1]))
        i -= 1
        j -= 1
    steps.reverse()
    return steps
