"""Kernel tests: brute-force oracles plus compiled/pure parity."""

import functools
import os
import subprocess
import sys

from hypothesis import given, settings
from hypothesis import strategies as st

from editgec import kernels
from editgec.kernels import fallback


def _oracle_distance(a, b):
    """Independent reference: plain recursive Levenshtein with memoization."""

    @functools.lru_cache(maxsize=None)
    def go(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        sub = go(i - 1, j - 1) + (0 if a[i - 1] == b[j - 1] else 1)
        return min(sub, go(i - 1, j) + 1, go(i, j - 1) + 1)

    return go(len(a), len(b))


short_text = st.text(alphabet="abcة ابت", max_size=12)


def test_distance_known_values():
    assert kernels.distance("kitten", "sitting") == 3
    assert kernels.distance("", "abc") == 3
    assert kernels.distance("abc", "") == 3
    assert kernels.distance("الإهتمام", "الاهتمام") == 1


def test_norm_distance_known_values():
    assert kernels.norm_distance("الإهتمام", "الاهتمام") == 1 / 8
    assert kernels.norm_distance("", "") == 0.0
    assert kernels.norm_distance("x", "x") == 0.0
    assert kernels.norm_distance("ab", "cd") == 1.0


@given(short_text, short_text)
@settings(max_examples=300)
def test_distance_matches_oracle(a, b):
    assert kernels.distance(a, b) == _oracle_distance(a, b)


@given(short_text, short_text)
def test_align_replays_to_target(a, b):
    steps = kernels.char_align_steps(a, b)
    out = []
    consumed = []
    for step in steps:
        if step[0] == "K":
            out.append(step[1])
            consumed.append(step[1])
        elif step[0] == "D":
            consumed.append(step[1])
        elif step[0] == "I":
            out.append(step[1])
        else:  # R
            consumed.append(step[1])
            out.append(step[2])
    assert "".join(consumed) == a
    assert "".join(out) == b


@given(short_text, short_text)
def test_align_step_count_is_minimal(a, b):
    steps = kernels.char_align_steps(a, b)
    cost = sum(1 for s in steps if s[0] != "K")
    assert cost == _oracle_distance(a, b)


def test_align_tie_break_puts_insertions_last():
    # "ه" -> "ة ." ties between R-early and R-late; forward order must be
    # replace, then the trailing inserts (they become appends downstream).
    steps = kernels.char_align_steps("النفسيه", "النفسية .")
    assert steps[-3:] == [("R", "ه", "ة"), ("I", " "), ("I", ".")]


def test_align_trivial_cases():
    assert kernels.char_align_steps("x", "x") == [("K", "x")]
    assert kernels.char_align_steps("", ".") == [("I", ".")]
    assert kernels.char_align_steps("a", "") == [("D", "a")]


@given(short_text, short_text)
@settings(max_examples=200)
def test_pure_and_active_backend_agree(a, b):
    assert kernels.distance(a, b) == fallback.distance(a, b)
    assert kernels.norm_distance(a, b) == fallback.norm_distance(a, b)
    assert kernels.char_align_steps(a, b) == fallback.align(a, b)


def test_norm_distance_matrix_parity():
    src = ["يجب", "الإهتمام", "ب", "", "x"]
    tgt = ["يجب", "الاهتمام", "بالصحة", ""]
    got = kernels.norm_distance_matrix(src, tgt)
    want = fallback.norm_distance_matrix(src, tgt)
    assert got.shape == (5, 4)
    assert (got == want).all()


def test_env_var_forces_pure_backend():
    env = dict(os.environ, EDITGEC_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import editgec.kernels as k; print(k.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "pure"
