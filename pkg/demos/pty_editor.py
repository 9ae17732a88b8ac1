"""
Driving an interactive program through a pty
============================================

Interactive programs want a terminal.  Random keystrokes alone never make
an editor quit, so a quit sequence goes after the input.  Without one the
run times out and is flagged as a hang.
"""

import tempfile

from refuzz.generator import GenSpec, generate_bytes
from refuzz.pty_driver import run_under_pty, sanitize_for_pty
from refuzz.specimens import build

bins = build(tempfile.mkdtemp(prefix="refuzz-bin-"))
editor = [str(bins["spec-editor"])]

keys = generate_bytes(GenSpec(200, "printable", seed=5)) + b"\x03\x1a"
# ^C, ^\, ^Z and ^D would signal or end the session before the editor sees them
print(len(keys), "->", len(sanitize_for_pty(keys)), "bytes after filtering")

quit_ok = run_under_pty(editor, keys, b"\x1b:q!", timeout=5)
print("with quit sequence:", quit_ok.outcome.describe(), f"{quit_ok.duration:.2f}s")

no_quit = run_under_pty(editor, keys, b"", timeout=2)
print("without:           ", no_quit.outcome.describe(), f"{no_quit.duration:.2f}s")
