"""Test outcome classification and process-group housekeeping."""

from __future__ import annotations

import os
import signal
import time
from dataclasses import dataclass

PASS = "pass"
CRASH = "crash"
HANG = "hang"
SETUP_ERROR = "setup_error"

# ordering for "worst outcome" aggregation
SEVERITY = {SETUP_ERROR: -1, PASS: 0, HANG: 1, CRASH: 2}


@dataclass(frozen=True)
class TestOutcome:
    """How one target execution ended.

    Only ``crash`` and ``hang`` count as failures.  A nonzero exit code is a
    pass: rejecting garbage input with an error is correct behaviour.
    """

    __test__ = False  # not a pytest class

    kind: str
    exit_code: int | None = None
    signal: int | None = None
    core: bool = False
    timeout: float | None = None
    verified: bool = False
    message: str = ""

    @classmethod
    def passed(cls, code: int) -> TestOutcome:
        return cls(PASS, exit_code=code)

    @classmethod
    def crashed(cls, sig: int, core: bool = False) -> TestOutcome:
        return cls(CRASH, signal=sig, core=core)

    @classmethod
    def hung(cls, timeout: float) -> TestOutcome:
        return cls(HANG, timeout=timeout, verified=False)

    @classmethod
    def setup_error(cls, message: str) -> TestOutcome:
        return cls(SETUP_ERROR, message=message)

    @classmethod
    def from_wait_status(cls, status: int) -> TestOutcome:
        if os.WIFSIGNALED(status):
            return cls.crashed(os.WTERMSIG(status), os.WCOREDUMP(status))
        return cls.passed(os.WEXITSTATUS(status))

    @property
    def failed(self) -> bool:
        return self.kind in (CRASH, HANG)

    def describe(self) -> str:
        if self.kind == PASS:
            return f"pass({self.exit_code})"
        if self.kind == CRASH:
            name = _signame(self.signal)
            return f"crash({name}{', core' if self.core else ''})"
        if self.kind == HANG:
            return f"hang({self.timeout:g}s, {'verified' if self.verified else 'unverified'})"
        return f"setup_error({self.message})"

    def to_fields(self) -> dict[str, str]:
        fields = {"outcome": self.kind}
        if self.exit_code is not None:
            fields["exit_code"] = str(self.exit_code)
        if self.signal is not None:
            fields["signal"] = str(self.signal)
            fields["signal_name"] = _signame(self.signal)
            fields["core"] = str(int(self.core))
        if self.timeout is not None:
            fields["timeout"] = f"{self.timeout:g}"
            fields["verified"] = str(int(self.verified))
        if self.message:
            fields["message"] = self.message
        return fields

    @classmethod
    def from_fields(cls, fields: dict[str, str]) -> TestOutcome:
        def opt_int(key):
            return int(fields[key]) if key in fields else None

        return cls(
            kind=fields["outcome"],
            exit_code=opt_int("exit_code"),
            signal=opt_int("signal"),
            core=fields.get("core") == "1",
            timeout=float(fields["timeout"]) if "timeout" in fields else None,
            verified=fields.get("verified") == "1",
            message=fields.get("message", ""),
        )


def _signame(sig: int | None) -> str:
    try:
        return signal.Signals(sig).name
    except (ValueError, TypeError):
        return f"SIG{sig}"


def group_members(pgid: int) -> list[int]:
    """Live (non-zombie) pids in process group ``pgid``.

    Uses /proc where available; elsewhere falls back to a signal-0 probe,
    which cannot tell zombies apart and returns ``[pgid]`` for any member.
    """
    if not os.path.isdir("/proc/self"):
        try:
            os.killpg(pgid, 0)
        except ProcessLookupError:
            return []
        except PermissionError:
            pass
        return [pgid]
    members = []
    for entry in os.listdir("/proc"):
        if not entry.isdigit():
            continue
        try:
            with open(f"/proc/{entry}/stat", "rb") as fh:
                stat = fh.read()
        except OSError:
            continue
        # fields after the parenthesised command name: state ppid pgrp ...
        rest = stat[stat.rindex(b")") + 2:].split()
        if int(rest[2]) == pgid and rest[0] != b"Z":
            members.append(int(entry))
    return members


def group_alive(pgid: int) -> bool:
    return bool(group_members(pgid))


def kill_group(pgid: int, sig: int = signal.SIGKILL) -> None:
    try:
        os.killpg(pgid, sig)
    except (ProcessLookupError, PermissionError):
        pass


def reap_group(pgid: int, grace: float = 0.5) -> bool:
    """Wait up to ``grace`` seconds for the group to empty, then SIGKILL it.

    Returns True once no member of the group remains.
    """
    deadline = time.monotonic() + grace
    while group_alive(pgid) and time.monotonic() < deadline:
        time.sleep(0.01)
    if group_alive(pgid):
        kill_group(pgid)
        deadline = time.monotonic() + 2.0
        while group_alive(pgid) and time.monotonic() < deadline:
            time.sleep(0.01)
    return not group_alive(pgid)


def wait_with_timeout(pid: int, timeout: float, poll: float = 0.01) -> int | None:
    """Wait for ``pid``; return its raw wait status, or None if still running at ``timeout``."""
    deadline = time.monotonic() + timeout
    while True:
        try:
            got, status, _ = os.wait4(pid, os.WNOHANG)
        except ChildProcessError:
            return None
        if got == pid:
            return status
        if time.monotonic() >= deadline:
            return None
        time.sleep(poll)
