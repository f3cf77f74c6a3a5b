"""Greedy longest-match subword tokenizer over the shared vocabulary file.

The file lists one entry per line; continuation pieces carry a "##" prefix.
Segmentation matches the convention used to produce training tag files: at
each position take the longest entry from the initial (position 0) or
continuation table, and a token with no match anywhere stays intact as a
single unknown subword.
"""

CONT_PREFIX = "##"


class SubwordTokenizer:
    def __init__(self, entries=()):
        self.initial = set()
        self.continuation = set()
        for e in entries:
            if e.startswith(CONT_PREFIX):
                if e[len(CONT_PREFIX):]:
                    self.continuation.add(e[len(CONT_PREFIX):])
            elif e:
                self.initial.add(e)

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls(line.rstrip("\n") for line in fh if line.rstrip("\n"))

    def entries(self):
        """The vocabulary in file form (sorted, continuations prefixed)."""
        return sorted(self.initial) + sorted(
            CONT_PREFIX + e for e in self.continuation
        )

    def segment(self, token):
        """The token's subword surfaces, concatenating back to the token."""
        n = len(token)
        pieces = []
        pos = 0
        while pos < n:
            table = self.initial if pos == 0 else self.continuation
            end = 0
            for stop in range(n, pos, -1):
                if token[pos:stop] in table:
                    end = stop
                    break
            if end == 0:
                return [token]
            pieces.append(token[pos:end])
            pos = end
        return pieces
