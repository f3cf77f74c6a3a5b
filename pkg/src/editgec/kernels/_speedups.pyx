# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Levenshtein kernels (hot inner loops of alignment).

Mirror of kernels.fallback; keep the two in sync.
"""

import numpy as np

BACKEND = "compiled"


cdef _enc(str s):
    return np.frombuffer(s.encode("utf-32-le"), dtype=np.uint32)


cdef int _dist(const unsigned int[::1] a, const unsigned int[::1] b,
               int[::1] prev, int[::1] cur):
    cdef int la = a.shape[0]
    cdef int lb = b.shape[0]
    cdef int i, j, cost, best, t
    cdef int[::1] tmp
    if la == 0:
        return lb
    if lb == 0:
        return la
    for j in range(lb + 1):
        prev[j] = j
    for i in range(1, la + 1):
        cur[0] = i
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            best = prev[j - 1] + cost
            t = prev[j] + 1
            if t < best:
                best = t
            t = cur[j - 1] + 1
            if t < best:
                best = t
            cur[j] = best
        tmp = prev
        prev = cur
        cur = tmp
    return prev[lb]


def distance(str a, str b):
    """Unit-cost Levenshtein distance between two strings."""
    if a == b:
        return 0
    cdef int lb = len(b)
    buf = np.empty((2, lb + 1), dtype=np.int32)
    return _dist(_enc(a), _enc(b), buf[0], buf[1])


def norm_distance(str a, str b):
    """distance(a, b) divided by the longer length; 0.0 for two empties."""
    if a == b:
        return 0.0
    cdef int m = max(len(a), len(b))
    if m == 0:
        return 0.0
    return distance(a, b) / <double> m


def norm_distance_matrix(src_tokens, tgt_tokens):
    """Normalized distances between every (src token, tgt token) pair."""
    cdef int n = len(src_tokens)
    cdef int m = len(tgt_tokens)
    out = np.empty((n, m), dtype=np.float64)
    cdef double[:, ::1] o = out
    src_enc = [_enc(s) for s in src_tokens]
    tgt_enc = [_enc(t) for t in tgt_tokens]
    cdef int maxlen = 1
    for t in tgt_tokens:
        if len(t) > maxlen:
            maxlen = len(t)
    buf = np.empty((2, maxlen + 1), dtype=np.int32)
    cdef int[::1] b0 = buf[0]
    cdef int[::1] b1 = buf[1]
    cdef int i, j, la, lb, d, mx
    cdef const unsigned int[::1] ea, eb
    for i in range(n):
        ea = src_enc[i]
        la = ea.shape[0]
        for j in range(m):
            eb = tgt_enc[j]
            lb = eb.shape[0]
            mx = la if la > lb else lb
            if mx == 0:
                o[i, j] = 0.0
                continue
            d = _dist(ea, eb, b0, b1)
            o[i, j] = d / <double> mx
    return out


def align(str a, str b):
    """Minimal unit-cost character alignment of a onto b.

    Returns a list of steps: ('K', c), ('D', c), ('I', c), ('R', c_src, c_tgt).
    At tie points the forward order prefers replace, then delete, then
    insert, so tied insertions trail (the backtrace therefore tries insert
    first, then delete, then the diagonal).
    """
    cdef int la = len(a)
    cdef int lb = len(b)
    cdef const unsigned int[::1] ea = _enc(a)
    cdef const unsigned int[::1] eb = _enc(b)
    dp_arr = np.empty((la + 1, lb + 1), dtype=np.int32)
    cdef int[:, ::1] dp = dp_arr
    cdef int i, j, cost, best, t
    for i in range(la + 1):
        dp[i, 0] = i
    for j in range(lb + 1):
        dp[0, j] = j
    for i in range(1, la + 1):
        for j in range(1, lb + 1):
            cost = 0 if ea[i - 1] == eb[j - 1] else 1
            best = dp[i - 1, j - 1] + cost
            t = dp[i - 1, j] + 1
            if t < best:
                best = t
            t = dp[i, j - 1] + 1
            if t < best:
                best = t
            dp[i, j] = best
    steps = []
    i = la
    j = lb
    while i > 0 or j > 0:
        if j > 0 and dp[i, j] == dp[i, j - 1] + 1:
            steps.append(("I", b[j - 1]))
            j -= 1
            continue
        if i > 0 and dp[i, j] == dp[i - 1, j] + 1:
            steps.append(("D", a[i - 1]))
            i -= 1
            continue
        if ea[i - 1] == eb[j - 1]:
            steps.append(("K", a[i - 1]))
        else:
            steps.append(("R", a[i - 1], b[j - 1]))
        i -= 1
        j -= 1
    steps.reverse()
    return steps
