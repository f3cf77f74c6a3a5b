"""Tokenization, punctuation classification, and subword segmentation."""

import sys
import unicodedata

from .errors import FormatError


def tokenize(text):
    """Split one line of text on Unicode whitespace, collapsing runs."""
    return text.split()


def detokenize(tokens):
    return " ".join(tokens)


# Explicitly listed so the default set is stable even if a narrow build or an
# old unicodedata misses them (they are all Po anyway).
_ARABIC_MARKS = frozenset("،؛؟")


def _default_is_punct(c):
    if c in _ARABIC_MARKS:
        return True
    cat = unicodedata.category(c)
    if cat.startswith("P"):
        return True
    # Symbols count as punctuation except currency signs.
    return cat.startswith("S") and cat != "Sc"


class PunctSet:
    """Total, deterministic punctuation predicate over Unicode scalars.

    The default follows general categories P* and S* (currency excluded) plus
    the Arabic comma/semicolon/question marks. An override is an explicit
    code-point set loaded from a file of U+XXXX lines.
    """

    def __init__(self, chars=None):
        self._chars = frozenset(chars) if chars is not None else None

    def __contains__(self, c):
        if self._chars is not None:
            return c in self._chars
        return _default_is_punct(c)

    is_punct = __contains__

    @classmethod
    def from_file(cls, path):
        chars = set()
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if not line.upper().startswith("U+"):
                    raise FormatError(f"{path}:{lineno}: expected U+XXXX, got {line!r}")
                try:
                    chars.add(chr(int(line[2:], 16)))
                except (ValueError, OverflowError) as exc:
                    raise FormatError(f"{path}:{lineno}: bad code point {line!r}") from exc
        return cls(chars)

    def materialize(self):
        """The full code-point set, sorted. Scans all scalars for the default."""
        if self._chars is not None:
            return sorted(self._chars)
        return [c for c in map(chr, range(sys.maxunicode + 1)) if _default_is_punct(c)]


DEFAULT_PUNCT = PunctSet()


def is_punct(c, punct=DEFAULT_PUNCT):
    return c in punct


class SubwordVocab:
    """Greedy longest-match-first subword segmentation (WordPiece-style).

    Continuation entries are stored with the "##" prefix. A token with no
    match at any position stays intact as one unknown subword.
    """

    CONT_PREFIX = "##"

    def __init__(self, entries=()):
        self.initial = set()
        self.continuation = set()
        for e in entries:
            self.add(e)

    def add(self, entry):
        if entry.startswith(self.CONT_PREFIX):
            piece = entry[len(self.CONT_PREFIX):]
            if piece:
                self.continuation.add(piece)
        elif entry:
            self.initial.add(entry)

    def __len__(self):
        return len(self.initial) + len(self.continuation)

    @classmethod
    def from_file(cls, path):
        vocab = cls()
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if line:
                    vocab.add(line)
        return vocab

    def to_file(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            for e in sorted(self.initial):
                fh.write(e + "\n")
            for e in sorted(self.continuation):
                fh.write(self.CONT_PREFIX + e + "\n")

    def segment(self, token):
        """Character spans [start, end) of the token's subwords."""
        n = len(token)
        if n == 0:
            return []
        spans = []
        pos = 0
        while pos < n:
            table = self.initial if pos == 0 else self.continuation
            end = 0
            for stop in range(n, pos, -1):
                if token[pos:stop] in table:
                    end = stop
                    break
            if end == 0:
                return [(0, n)]  # unknown: whole token, never dropped
            spans.append((pos, end))
            pos = end
        return spans
