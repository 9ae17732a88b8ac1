import os
import signal
import subprocess

import pytest

from refuzz.corpus import CorpusPlan, build_corpus
from refuzz.outcome import CRASH, HANG, PASS
from refuzz.specimens import SPECIMENS

CASES = [
    ("spec-cat", b"anything\n", PASS),
    ("spec-crash-bounds", b"x" * 257, CRASH),
    ("spec-crash-bounds", (b"x" * 256 + b"\n") * 3, PASS),
    ("spec-crash-retval", b"'unterminated", CRASH),
    ("spec-crash-retval", b"a'b", PASS),
    ("spec-hang-parens", b"(((", HANG),
    ("spec-hang-parens", b"(()())", PASS),
    ("spec-hang-parens", b")(", PASS),
    ("spec-hang-noadvance", b"\x00abc", HANG),
    ("spec-hang-noadvance", b"a\x00bc", PASS),
    ("spec-slow-quadratic", b"abc\n" * 10, PASS),
    ("spec-editor", b"text\x1b:q!", PASS),
    ("spec-editor", b"text", HANG),
]


def run_direct(path, data, mode, timeout=2.0, tmp=None):
    args = [path]
    stdin = data
    if mode == "file":
        f = tmp / "input"
        f.write_bytes(data)
        args.append(str(f))
        stdin = b""
    try:
        p = subprocess.run(args, input=stdin, capture_output=True, timeout=timeout,
                           start_new_session=True)
    except subprocess.TimeoutExpired:
        return HANG, None
    if p.returncode < 0:
        return CRASH, -p.returncode
    return PASS, p.returncode


@pytest.mark.parametrize("mode", ["stdin", "file"])
@pytest.mark.parametrize("name, data, expected", CASES)
def test_specimen_behaviour(specimen_bin, tmp_path, name, data, expected, mode):
    assert SPECIMENS[name].expected_kind(data) == expected
    kind, detail = run_direct(specimen_bin[name], data, mode, tmp=tmp_path)
    assert kind == expected
    if kind == CRASH:
        assert detail == signal.SIGABRT
    if kind == PASS:
        assert detail == 0


def test_cat_copies(specimen_bin):
    data = bytes(range(256)) * 10
    assert subprocess.run([specimen_bin["spec-cat"]], input=data,
                          capture_output=True).stdout == data


def test_options_are_ignored(specimen_bin, tmp_path):
    f = tmp_path / "in"
    f.write_bytes(b"'")
    p = subprocess.run([specimen_bin["spec-crash-retval"], "-x", "--long", str(f)])
    assert p.returncode == -signal.SIGABRT


def test_quadratic_is_slow_on_one_long_line(specimen_bin):
    assert SPECIMENS["spec-slow-quadratic"].fails(b"a" * 200_000)
    kind, _ = run_direct(specimen_bin["spec-slow-quadratic"], b"a" * 200_000, "stdin", timeout=2)
    assert kind == HANG


def test_build_layout(specimen_bin):
    assert set(specimen_bin) == set(SPECIMENS)
    for path in specimen_bin.values():
        assert os.access(path, os.X_OK)
        with open(path) as fh:
            assert fh.readline().startswith("#!")


def test_small_corpus_ground_truth(tmp_path):
    """Printable raw small files always overflow the 256-byte line buffer; line files never do."""
    m = build_corpus(CorpusPlan(["small"], files_per_category=3, base_seed=11, output_dir=tmp_path))
    bounds = SPECIMENS["spec-crash-bounds"]
    for e in m.entries:
        data = (tmp_path / e.path).read_bytes()
        if "_raw_" not in e.path:
            assert not bounds.fails(data)
        elif "printable" in e.path:
            assert bounds.fails(data)
