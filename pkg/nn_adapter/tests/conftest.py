import subprocess
import sys

import pytest

EDITGEC = [sys.executable, "-m", "editgec.cli"]


def editgec(*args):
    proc = subprocess.run(EDITGEC + list(args), capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr or proc.stdout
    return proc.stdout


@pytest.fixture(scope="session", name="editgec")
def editgec_fixture():
    return editgec


@pytest.fixture(scope="session")
def workdir(tmp_path_factory):
    """Suite corpus plus the extracted tag files and label vocabulary."""
    from nn_adapter.suite import make_suite, write_suite

    d = tmp_path_factory.mktemp("suite")
    srcs, tgts = make_suite(240, seed=1)
    write_suite(srcs, tgts, d / "train.src", d / "train.tgt", d / "sw.txt")
    dev_srcs, dev_tgts = make_suite(80, seed=2)
    write_suite(dev_srcs, dev_tgts, d / "dev.src", d / "dev.tgt")
    editgec("extract", str(d / "train.src"), str(d / "train.tgt"),
            "-o", str(d / "train.tags"), "--granularity", "subword",
            "--subword-vocab", str(d / "sw.txt"), "--compress",
            "--vocab-out", str(d / "vocab.tsv"))
    editgec("extract", str(d / "dev.src"), str(d / "dev.tgt"),
            "-o", str(d / "dev.tags"), "--granularity", "subword",
            "--subword-vocab", str(d / "sw.txt"), "--compress")
    return d
