"""Dev-set scoring through the editgec CLI.

Checkpoint selection needs F0.5 of a prediction tag file against a reference
corpus. Edit application and M2 scoring are the edit-tagging package's job,
so both run as subprocesses of its CLI; only files cross the boundary.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

DEFAULT_CMD = (sys.executable, "-m", "editgec.cli")


class ScoringError(Exception):
    pass


class EditgecScorer:
    def __init__(self, src_file, ref_file, cmd=DEFAULT_CMD):
        self.src_file = str(src_file)
        self.ref_file = str(ref_file)
        self.cmd = list(cmd)

    def _run(self, *args):
        proc = subprocess.run(
            self.cmd + list(args), capture_output=True, text=True
        )
        if proc.returncode != 0:
            raise ScoringError(
                f"editgec {args[0]} failed ({proc.returncode}): "
                f"{proc.stderr.strip() or proc.stdout.strip()}"
            )
        return proc.stdout

    def f05(self, pred_tag_file):
        """Apply the predictions to the source corpus and score against the reference."""
        with tempfile.TemporaryDirectory() as tmp:
            hyp = str(Path(tmp) / "hyp.txt")
            self._run("apply", self.src_file, str(pred_tag_file), "-o", hyp)
            out = self._run(
                "score", hyp, "--src", self.src_file, "--ref", self.ref_file,
                "--machine",
            )
        # machine line: tp fp fn P R F1 F0.5
        fields = out.strip().splitlines()[-1].split()
        if len(fields) != 7:
            raise ScoringError(f"unexpected scorer output: {out!r}")
        return float(fields[6])
