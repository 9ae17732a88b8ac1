"""Run records: one ``key=value`` text file per executed test.

Lists are JSON-encoded, output tails are base64.  Files are written to a
temporary name and renamed into place so a reader never sees half a
record.
"""

from __future__ import annotations

import base64
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .config import ConfigEntry, parse_config
from .outcome import TestOutcome

RESULT_SUFFIX = ".result"


@dataclass
class RunRecord:
    entry: ConfigEntry
    argv: list[str]
    inputs: list[str]
    options: list[str]
    start: str
    duration: float
    outcome: TestOutcome
    stdout_tail: bytes = b""
    stderr_tail: bytes = b""
    scratch: str = ""
    campaign_seed: int = 0
    test_seed: int = 0
    platform: str = ""
    name: str = ""
    entry_index: int = 0
    orphans_reaped: bool = True
    pgid: int | None = None
    recheck: TestOutcome | None = None
    limits: dict[str, str] = field(default_factory=dict)

    @property
    def utility(self) -> str:
        return self.entry.utility

    def dumps(self) -> str:
        fields = {
            "name": self.name,
            "utility": self.utility,
            "entry": self.entry.render(),
            "entry_index": str(self.entry_index),
            "argv": json.dumps(self.argv),
            "inputs": json.dumps(self.inputs),
            "options": json.dumps(self.options),
            "platform": self.platform,
            "campaign_seed": str(self.campaign_seed),
            "test_seed": str(self.test_seed),
            "start": self.start,
            "duration": f"{self.duration:.6f}",
            **self.outcome.to_fields(),
            "orphans_reaped": str(int(self.orphans_reaped)),
            "pgid": "" if self.pgid is None else str(self.pgid),
            "limits": json.dumps(self.limits, sort_keys=True),
            "scratch": self.scratch,
            "stdout_tail": base64.b64encode(self.stdout_tail).decode("ascii"),
            "stderr_tail": base64.b64encode(self.stderr_tail).decode("ascii"),
        }
        if self.recheck is not None:
            fields["recheck"] = self.recheck.describe()
            fields.update({f"recheck_{k}": v for k, v in self.recheck.to_fields().items()})
        return "".join(f"{k}={_escape(v)}\n" for k, v in fields.items())

    @classmethod
    def loads(cls, text: str) -> RunRecord:
        f = {}
        for line in text.splitlines():
            if line:
                key, _, value = line.partition("=")
                f[key] = _unescape(value)
        recheck = None
        if "recheck_outcome" in f:
            recheck = TestOutcome.from_fields(
                {k[len("recheck_"):]: v for k, v in f.items() if k.startswith("recheck_")})
        return cls(
            entry=parse_config(f["entry"])[0],
            argv=json.loads(f["argv"]),
            inputs=json.loads(f["inputs"]),
            options=json.loads(f["options"]),
            start=f["start"],
            duration=float(f["duration"]),
            outcome=TestOutcome.from_fields(f),
            stdout_tail=base64.b64decode(f.get("stdout_tail", "")),
            stderr_tail=base64.b64decode(f.get("stderr_tail", "")),
            scratch=f.get("scratch", ""),
            campaign_seed=int(f.get("campaign_seed", 0)),
            test_seed=int(f.get("test_seed", 0)),
            platform=f.get("platform", ""),
            name=f.get("name", ""),
            entry_index=int(f.get("entry_index", 0)),
            orphans_reaped=f.get("orphans_reaped", "1") == "1",
            pgid=int(f["pgid"]) if f.get("pgid") else None,
            recheck=recheck,
            limits=json.loads(f.get("limits", "{}")),
        )


def _escape(value: str) -> str:
    return value.replace("\\", "\\\\").replace("\n", "\\n")


def _unescape(value: str) -> str:
    out = []
    it = iter(value)
    for ch in it:
        if ch == "\\":
            nxt = next(it, "")
            out.append("\n" if nxt == "n" else nxt)
        else:
            out.append(ch)
    return "".join(out)


def write_record(record: RunRecord, directory: str | os.PathLike) -> Path:
    directory = Path(directory)
    path = directory / (record.name + RESULT_SUFFIX)
    tmp = directory / f".{record.name}{RESULT_SUFFIX}.tmp"
    tmp.write_text(record.dumps())
    os.replace(tmp, path)
    return path


def load_records(directory: str | os.PathLike) -> list[RunRecord]:
    return [RunRecord.loads(p.read_text())
            for p in sorted(Path(directory).glob("*" + RESULT_SUFFIX))]
