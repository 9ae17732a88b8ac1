"""Deliberately defective target programs with known triggers.

Each specimen is a self-contained script in this directory.  :func:`build`
copies them into a directory as ``spec-*`` executables bound to the
current interpreter, which is the build step tests and demos rely on.
Specimens simulate memory errors with ``abort()`` rather than real
undefined behaviour; the harness only cares that a signal ended them.

``SPECIMENS[name].fails(data)`` predicts from the input bytes alone
whether the specimen will crash or hang on it.
"""

from __future__ import annotations

import os
import stat
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from ..outcome import CRASH, HANG, PASS

HERE = Path(__file__).resolve().parent

LINE_CAPACITY = 256
QUADRATIC_BUDGET = 10 ** 9


@dataclass(frozen=True)
class SpecimenSpec:
    name: str
    module: str
    category: str
    trigger: str
    expected: str
    fails: Callable[[bytes], bool]
    modes: tuple[str, ...] = ("stdin", "file")

    @property
    def source(self) -> Path:
        return HERE / f"{self.module}.py"

    def expected_kind(self, data: bytes) -> str:
        return self.expected if self.fails(data) else PASS


def _long_line(data: bytes) -> bool:
    return any(len(line) > LINE_CAPACITY for line in data.split(b"\n"))


def _quadratic(data: bytes) -> bool:
    return sum(len(line) ** 2 for line in data.split(b"\n")) > QUADRATIC_BUDGET


SPECIMENS: dict[str, SpecimenSpec] = {
    s.name: s
    for s in [
        SpecimenSpec("spec-cat", "spec_cat", "Other",
                     "never", PASS, lambda d: False),
        SpecimenSpec("spec-crash-bounds", "spec_crash_bounds", "PointersAndArrays",
                     f"a line longer than {LINE_CAPACITY} bytes", CRASH, _long_line),
        SpecimenSpec("spec-crash-retval", "spec_crash_retval", "ReturnValues",
                     "first byte is a single quote", CRASH, lambda d: d[:1] == b"'"),
        SpecimenSpec("spec-hang-parens", "spec_hang_parens", "PointersAndArrays",
                     "more '(' than ')'", HANG, lambda d: d.count(b"(") > d.count(b")")),
        SpecimenSpec("spec-hang-noadvance", "spec_hang_noadvance", "ComplexState",
                     "leading NUL byte", HANG, lambda d: d[:1] == b"\x00"),
        SpecimenSpec("spec-slow-quadratic", "spec_slow_quadratic", "ComplexState",
                     "sum of squared line lengths above 1e9", HANG, _quadratic),
        SpecimenSpec("spec-editor", "spec_editor", "Other",
                     "input lacks ESC : q !", HANG, lambda d: b"\x1b:q!" not in d,
                     modes=("stdin", "file", "pty")),
    ]
}

# the suite used for campaign ground truth; spec-slow-quadratic is left out
# because its runtime on passing inputs depends on machine speed
CAMPAIGN_SUITE = ("spec-cat", "spec-crash-bounds", "spec-crash-retval",
                  "spec-hang-parens", "spec-hang-noadvance")


def build(bin_dir: str | os.PathLike, python: str | None = None) -> dict[str, Path]:
    """Install every specimen into ``bin_dir``; return name -> executable path."""
    bin_dir = Path(bin_dir)
    bin_dir.mkdir(parents=True, exist_ok=True)
    interp = python or sys.executable
    out = {}
    for spec in SPECIMENS.values():
        target = bin_dir / spec.name
        body = spec.source.read_text()
        target.write_text(f"#!{interp}\n{body}")
        target.chmod(target.stat().st_mode | stat.S_IXUSR | stat.S_IXGRP | stat.S_IXOTH)
        out[spec.name] = target
    return out
