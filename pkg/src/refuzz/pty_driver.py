"""Drive an interactive target through a fresh pseudo-terminal.

The target becomes a session leader whose controlling terminal is the
replica side of a new pty.  Input is written through the primary side in
1 KiB pieces while output is drained concurrently, so a target that echoes
or prints heavily can never wedge the writer.  An end-of-file does not
travel through a terminal, so only the timeout turns a silent target into
a hang; such hangs are flagged unverified.
"""

from __future__ import annotations

import argparse
import collections
import errno
import fcntl
import os
import re
import selectors
import shutil
import signal
import struct
import subprocess
import sys
import termios
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .outcome import TestOutcome, kill_group, reap_group

# INTR, QUIT, SUSP, EOF under default termios settings
DEFAULT_CONTROL_BYTES = b"\x03\x1c\x1a\x04"
ROWS, COLS = 24, 80
WRITE_CHUNK = 1024
TAIL_BYTES = 64 * 1024


def sanitize_for_pty(data: bytes, control_bytes: bytes = DEFAULT_CONTROL_BYTES) -> bytes:
    """Drop bytes the line discipline would turn into signals or EOF."""
    return bytes(data).translate(None, control_bytes)


_ESCAPE = re.compile(rb"\\(x[0-9A-Fa-f]{2}|.)", re.S)
_SIMPLE = {b"n": b"\n", b"r": b"\r", b"e": b"\x1b", b"t": b"\t", b"\\": b"\\", b'"': b'"'}


def decode_quit(text: str | bytes) -> bytes:
    r"""Decode a quit sequence written with ``\xNN``, ``\n``, ``\r``, ``\e`` escapes.

    >>> decode_quit(r"\e:q!\n")
    b'\x1b:q!\n'
    """
    raw = text.encode("utf-8") if isinstance(text, str) else text

    def sub(m):
        tok = m.group(1)
        if tok[:1] == b"x" and len(tok) == 3:
            return bytes([int(tok[1:], 16)])
        if tok in _SIMPLE:
            return _SIMPLE[tok]
        raise ValueError(f"unknown escape \\{tok.decode('latin-1')} in quit sequence")

    return _ESCAPE.sub(sub, raw)


def encode_quit(data: bytes) -> str:
    """Inverse of :func:`decode_quit` producing a printable rendering."""
    out = []
    for b in data:
        if b == 0x1B:
            out.append(r"\e")
        elif b == 0x0A:
            out.append(r"\n")
        elif b == 0x0D:
            out.append(r"\r")
        elif 0x20 <= b < 0x7F and b not in (0x22, 0x5C):
            out.append(chr(b))
        else:
            out.append(f"\\x{b:02x}")
    return "".join(out)


@dataclass
class PtyResult:
    outcome: TestOutcome
    output: bytes = b""
    duration: float = 0.0
    bytes_written: int = 0
    pid: int | None = None
    orphans_reaped: bool = True


class _Tail:
    def __init__(self, limit: int):
        self.limit = limit
        self.chunks: collections.deque[bytes] = collections.deque()
        self.size = 0

    def add(self, data: bytes) -> None:
        self.chunks.append(data)
        self.size += len(data)
        while self.size - len(self.chunks[0]) >= self.limit:
            self.size -= len(self.chunks.popleft())

    def value(self) -> bytes:
        return b"".join(self.chunks)[-self.limit:]


def resolve_argv0(argv: Sequence[str], cwd: str | None = None) -> str | None:
    cmd = argv[0]
    if os.sep in cmd:
        path = cmd if os.path.isabs(cmd) or cwd is None else os.path.join(cwd, cmd)
        return cmd if os.access(path, os.X_OK) else None
    return shutil.which(cmd)


def _child_setup(extra: Callable[[], None] | None):
    def setup():
        # start_new_session already called setsid(); claim the pty
        fcntl.ioctl(0, termios.TIOCSCTTY, 0)
        if extra is not None:
            extra()

    return setup


def run_under_pty(
    argv: Sequence[str],
    input: bytes = b"",
    quit: bytes = b"",
    timeout: float = 300.0,
    *,
    sanitize: bool = True,
    control_bytes: bytes = DEFAULT_CONTROL_BYTES,
    cwd: str | None = None,
    env: dict | None = None,
    preexec: Callable[[], None] | None = None,
    tail_bytes: int = TAIL_BYTES,
    grace: float = 0.5,
    settle: float = 0.25,
) -> PtyResult:
    """Run ``argv`` on a new pty, feed ``input`` then ``quit``, and classify the ending.

    Signal death is a crash, any exit is a pass, and a target still alive
    at ``timeout`` is an unverified hang whose whole process group is
    killed.  ``preexec`` runs in the child before exec (resource limits).

    Writing starts once the child changes its terminal modes (an
    interactive program switching to raw mode) or after ``settle``
    seconds, whichever comes first; bytes queued before a mode switch can
    otherwise be lost in the canonical line buffer.
    """
    argv = list(argv)
    if not argv or resolve_argv0(argv, cwd) is None:
        return PtyResult(TestOutcome.setup_error(f"command not found: {argv[0] if argv else ''}"))
    payload = (sanitize_for_pty(input, control_bytes) if sanitize else bytes(input)) + bytes(quit)

    try:
        primary, replica = os.openpty()
    except OSError as exc:
        return PtyResult(TestOutcome.setup_error(f"pty allocation failed: {exc}"))
    fcntl.ioctl(replica, termios.TIOCSWINSZ, struct.pack("HHHH", ROWS, COLS, 0, 0))

    start = time.monotonic()
    try:
        proc = subprocess.Popen(
            argv, stdin=replica, stdout=replica, stderr=replica,
            start_new_session=True, preexec_fn=_child_setup(preexec),
            cwd=cwd, env=env, close_fds=True,
        )
    except (OSError, subprocess.SubprocessError) as exc:
        os.close(primary)
        os.close(replica)
        return PtyResult(TestOutcome.setup_error(f"spawn failed: {exc}"))
    os.close(replica)
    pgid = proc.pid
    initial_modes = termios.tcgetattr(primary)
    writing = False

    os.set_blocking(primary, False)
    tail = _Tail(tail_bytes)
    sel = selectors.DefaultSelector()
    sel.register(primary, selectors.EVENT_READ)
    offset = 0
    status = None
    deadline = start + timeout
    eof = False
    try:
        while True:
            got, st, _ = os.wait4(proc.pid, os.WNOHANG)
            if got == proc.pid:
                status = st
                break
            now = time.monotonic()
            if now >= deadline:
                break
            if not writing and payload and (
                now - start >= settle or termios.tcgetattr(primary) != initial_modes
            ):
                writing = True
                sel.modify(primary, selectors.EVENT_READ | selectors.EVENT_WRITE)
            events = sel.select(min(0.05 if writing else 0.01, deadline - now)) if not eof else []
            if eof:
                time.sleep(0.01)
            for _, mask in events:
                if mask & selectors.EVENT_READ and not eof:
                    eof = _drain(primary, tail)
                if mask & selectors.EVENT_WRITE and offset < len(payload):
                    try:
                        offset += os.write(primary, payload[offset:offset + WRITE_CHUNK])
                    except BlockingIOError:
                        pass
                    except OSError as exc:
                        if exc.errno != errno.EIO:
                            raise
                        offset = len(payload)
                    if offset >= len(payload):
                        sel.modify(primary, selectors.EVENT_READ)
        if status is None:
            kill_group(pgid)
            _, status, _ = os.wait4(proc.pid, 0)
            outcome = TestOutcome.hung(timeout)
        else:
            outcome = TestOutcome.from_wait_status(status)
            # pick up output written just before exit
            end = time.monotonic() + 0.2
            while not eof and time.monotonic() < end:
                if not sel.select(0.02):
                    break
                eof = _drain(primary, tail)
        duration = time.monotonic() - start
    finally:
        proc.returncode = -1 if status is None else status
        sel.close()
        os.close(primary)
    clean = reap_group(pgid, grace)
    return PtyResult(outcome, tail.value(), duration, offset, proc.pid, clean)


def _drain(fd: int, tail: _Tail) -> bool:
    """Read everything currently available; True at end of file."""
    while True:
        try:
            data = os.read(fd, 65536)
        except BlockingIOError:
            return False
        except OSError as exc:
            if exc.errno == errno.EIO:  # replica closed on Linux
                return True
            raise
        if not data:
            return True
        tail.add(data)


EXIT_CODES = {"pass": 0, "crash": 10, "hang": 11, "setup_error": 12}


def main(argv: Sequence[str] | None = None) -> int:
    p = argparse.ArgumentParser(
        prog="refuzz-pty",
        description="Feed standard input to CMD through a pseudo-terminal.",
    )
    p.add_argument("--quit", default="", help=r"sequence appended after the input, e.g. '\e:q!'")
    p.add_argument("--timeout", type=float, default=300.0, help="seconds before declaring a hang")
    p.add_argument("--no-sanitize", action="store_true", help="keep ^C, ^\\, ^Z and ^D bytes")
    p.add_argument("command", nargs=argparse.REMAINDER)
    ns = p.parse_args(sys.argv[1:] if argv is None else argv)
    cmd = ns.command[1:] if ns.command[:1] == ["--"] else ns.command
    if not cmd:
        p.error("missing command")
    data = sys.stdin.buffer.read()
    res = run_under_pty(cmd, data, decode_quit(ns.quit), ns.timeout, sanitize=not ns.no_sanitize)
    sys.stdout.buffer.write(res.output)
    sys.stdout.buffer.flush()
    print(f"refuzz-pty: {' '.join(cmd)}: {res.outcome.describe()} "
          f"after {res.duration:.2f}s", file=sys.stderr)
    return EXIT_CODES[res.outcome.kind]


if __name__ == "__main__":
    signal.signal(signal.SIGPIPE, signal.SIG_DFL)
    sys.exit(main())
