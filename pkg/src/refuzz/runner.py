"""Campaign runner: every config entry against every input file.

Each test runs in its own scratch directory, in its own process group,
under resource limits.  A test whose process is killed by a signal is a
crash; one still running at the timeout is a hang (recorded unverified,
the group is killed); every exit, whatever its code, is a pass.  Option
choices and ``two_files`` partners are drawn from per-test SplitMix64
streams derived from the campaign seed, so a campaign replays exactly.
"""

from __future__ import annotations

import argparse
import hashlib
import logging
import os
import platform as _platform
import resource
import shutil
import subprocess
import sys
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

from .config import ConfigEntry, parse_config, select_options
from .generator import SplitMix64, next_index, splitmix64_next
from .outcome import HANG, TestOutcome, group_members, kill_group, reap_group, wait_with_timeout
from .pty_driver import run_under_pty
from .records import RunRecord, write_record

log = logging.getLogger(__name__)

GIB = 1 << 30
TAIL_BYTES = 4096


@dataclass
class CampaignSettings:
    timeout: float = 300.0
    workers: int = 1
    cpu_seconds: int | None = None  # None: twice the timeout
    address_space: int | None = None  # bytes; None: unlimited
    file_size: int | None = GIB
    scratch_root: str | os.PathLike | None = None
    campaign_seed: int = 0
    platform: str = field(default_factory=_platform.system)
    recheck_hangs: float | None = None
    keep_scratch: bool = False
    env: dict[str, str] | None = None
    pty_sanitize: bool = True
    grace: float = 0.5

    def __post_init__(self):
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.recheck_hangs is not None and self.recheck_hangs <= 1:
            raise ValueError("recheck factor must exceed 1")

    def limits(self, timeout: float | None = None) -> dict[str, int]:
        t = self.timeout if timeout is None else timeout
        out = {"cpu": int(self.cpu_seconds or max(1, round(2 * t))), "core": 0}
        if self.file_size is not None:
            out["fsize"] = int(self.file_size)
        if self.address_space is not None:
            out["as"] = int(self.address_space)
        return out


_RLIMITS = {"cpu": resource.RLIMIT_CPU, "core": resource.RLIMIT_CORE,
            "fsize": resource.RLIMIT_FSIZE, "as": resource.RLIMIT_AS}


def _limiter(limits: dict[str, int]):
    def apply():
        for key, value in limits.items():
            soft = hard = value
            if key == "cpu":
                hard = value + 1  # SIGXCPU at soft, SIGKILL at hard
            _, cur_hard = resource.getrlimit(_RLIMITS[key])
            if cur_hard != resource.RLIM_INFINITY:
                soft, hard = min(soft, cur_hard), min(hard, cur_hard)
            resource.setrlimit(_RLIMITS[key], (soft, hard))

    return apply


def _tail(path: Path, n: int = TAIL_BYTES) -> bytes:
    try:
        with open(path, "rb") as fh:
            fh.seek(0, os.SEEK_END)
            size = fh.tell()
            fh.seek(max(0, size - n))
            return fh.read()
    except OSError:
        return b""


def resolve_command(command: str, env: dict | None = None) -> str | None:
    if os.sep in command:
        path = os.path.abspath(command)
        return path if os.access(path, os.X_OK) and os.path.isfile(path) else None
    search = (env or os.environ).get("PATH", os.defpath)
    return shutil.which(command, path=search)


def build_argv(entry: ConfigEntry, inputs: Sequence[str], options: Sequence[str]) -> list[str]:
    argv = [entry.command, *entry.fixed_args, *options]
    if entry.input_mode in ("file", "two_files"):
        argv += list(inputs)
    elif entry.input_mode == "cp":
        argv.append(entry.copy_target_name)
    return argv


def execute_test(
    entry: ConfigEntry,
    inputs: Sequence[str | os.PathLike],
    settings: CampaignSettings,
    options: Sequence[str] = (),
    *,
    name: str | None = None,
    result_dir: str | os.PathLike | None = None,
    timeout: float | None = None,
    test_seed: int = 0,
    entry_index: int = 0,
) -> RunRecord:
    """Run one test and return its record; also persist it when ``result_dir`` is given.

    A missing or unspawnable binary yields a ``setup_error`` outcome, which
    never counts against the utility.
    """
    inputs = [str(Path(p).resolve()) for p in inputs]
    if entry.input_mode == "two_files" and len(inputs) != 2:
        raise ValueError("two_files needs exactly two inputs")
    if entry.input_mode != "two_files" and len(inputs) != 1:
        raise ValueError(f"{entry.input_mode} needs exactly one input")
    timeout = settings.timeout if timeout is None else timeout
    name = name or _record_name(entry, inputs, entry_index)
    limits = settings.limits(timeout)

    root = Path(settings.scratch_root or Path(tempfile.gettempdir()) / "refuzz-scratch")
    root.mkdir(parents=True, exist_ok=True)
    test_dir = Path(_unique_dir(root, name))
    work = test_dir / "work"
    work.mkdir()

    argv = build_argv(entry, inputs, options)
    resolved = resolve_command(entry.command, settings.env)
    start_stamp = datetime.now(timezone.utc).isoformat(timespec="milliseconds")
    t0 = time.monotonic()
    stdout_tail = stderr_tail = b""
    clean = True
    pgid = None

    if resolved is None:
        outcome = TestOutcome.setup_error(f"command not found: {entry.command}")
    elif entry.input_mode == "pty":
        data = Path(inputs[0]).read_bytes()
        res = run_under_pty(
            [resolved, *argv[1:]], data, entry.quit or b"", timeout,
            sanitize=settings.pty_sanitize, cwd=str(work), env=settings.env,
            preexec=_limiter(limits), tail_bytes=TAIL_BYTES, grace=settings.grace,
        )
        outcome, stdout_tail, clean, pgid = res.outcome, res.output, res.orphans_reaped, res.pid
    else:
        if entry.input_mode == "cp":
            shutil.copyfile(inputs[0], work / entry.copy_target_name)
        outcome, clean, pgid = _spawn_and_wait(
            [resolved, *argv[1:]], entry, inputs, work, test_dir, settings, limits, timeout)
        stdout_tail = _tail(test_dir / "stdout")
        stderr_tail = _tail(test_dir / "stderr")
    duration = time.monotonic() - t0

    record = RunRecord(
        entry=entry, argv=argv, inputs=inputs, options=list(options), start=start_stamp,
        duration=duration, outcome=outcome, stdout_tail=stdout_tail,
        stderr_tail=stderr_tail, scratch=str(test_dir),
        campaign_seed=settings.campaign_seed, test_seed=test_seed,
        platform=settings.platform, name=name, entry_index=entry_index,
        orphans_reaped=clean, pgid=pgid, limits={k: str(v) for k, v in limits.items()},
    )
    if not settings.keep_scratch:
        shutil.rmtree(test_dir, ignore_errors=True)
    if result_dir is not None:
        write_record(record, result_dir)
    return record


def _spawn_and_wait(argv, entry, inputs, work, test_dir, settings, limits, timeout):
    stdin = open(inputs[0], "rb") if entry.input_mode == "stdin" else subprocess.DEVNULL
    try:
        with open(test_dir / "stdout", "wb") as out, open(test_dir / "stderr", "wb") as err:
            try:
                proc = subprocess.Popen(
                    argv, stdin=stdin, stdout=out, stderr=err, cwd=work,
                    env=settings.env, start_new_session=True,
                    preexec_fn=_limiter(limits), close_fds=True,
                )
            except (OSError, subprocess.SubprocessError) as exc:
                return TestOutcome.setup_error(f"spawn failed: {exc}"), True, None
    finally:
        if stdin is not subprocess.DEVNULL:
            stdin.close()
    status = wait_with_timeout(proc.pid, timeout)
    if status is None:
        kill_group(proc.pid)
        _, status, _ = os.wait4(proc.pid, 0)
        outcome = TestOutcome.hung(timeout)
    else:
        outcome = TestOutcome.from_wait_status(status)
    proc.returncode = status
    return outcome, reap_group(proc.pid, settings.grace), proc.pid


def _unique_dir(root: Path, name: str) -> str:
    for k in range(10_000):
        path = root / (name if k == 0 else f"{name}.{k}")
        try:
            path.mkdir()
            return str(path)
        except FileExistsError:
            continue
    raise RuntimeError(f"could not create scratch directory for {name}")


def _safe(text: str) -> str:
    return "".join(c if c.isalnum() or c in "-._+" else "_" for c in text)


def _record_name(entry: ConfigEntry, inputs: Sequence[str], k: int) -> str:
    files = "+".join(Path(p).name for p in inputs)
    return f"{_safe(entry.utility)}_{_safe(files)}_{k}"


def _hash64(text: str) -> int:
    return int.from_bytes(hashlib.blake2b(text.encode(), digest_size=8).digest(), "big")


def test_seed_for(campaign_seed: int, entry_index: int, entry: ConfigEntry, input_name: str) -> int:
    _, seed = splitmix64_next(campaign_seed ^ _hash64(f"{entry_index}\t{entry.render()}\t{input_name}"))
    return seed


test_seed_for.__test__ = False  # not a pytest test


@dataclass(frozen=True)
class PlannedTest:
    entry_index: int
    entry: ConfigEntry
    inputs: tuple[str, ...]
    options: tuple[str, ...]
    seed: int
    name: str


def plan_campaign(entries: Sequence[ConfigEntry], input_files: Sequence[str | os.PathLike],
                  campaign_seed: int) -> list[PlannedTest]:
    """Expand entries x inputs into concrete tests; a pure function of its arguments."""
    files = sorted(str(Path(f).resolve()) for f in input_files)
    plan = []
    for k, entry in enumerate(entries):
        for i, f in enumerate(files):
            seed = test_seed_for(campaign_seed, k, entry, Path(f).name)
            rng = SplitMix64(seed)
            options = tuple(select_options(entry.option_pool, rng))
            inputs: tuple[str, ...] = (f,)
            if entry.input_mode == "two_files":
                if len(files) < 2:
                    raise ValueError("two_files entries need at least two input files")
                j = next_index(rng, len(files) - 1)
                inputs = (f, files[j + 1 if j >= i else j])
            plan.append(PlannedTest(k, entry, inputs, options, seed,
                                    _record_name(entry, inputs, k)))
    return plan


@dataclass
class CampaignSummary:
    records: list[RunRecord]
    stats: object
    orphans: list[int] = field(default_factory=list)

    @property
    def failed_utilities(self) -> set[str]:
        return {r.utility for r in self.records if r.outcome.failed}


def list_inputs(input_dir: str | os.PathLike) -> list[Path]:
    return sorted(p for p in Path(input_dir).iterdir()
                  if p.is_file() and not p.name.startswith(("MANIFEST", ".")))


def run_campaign(
    config: str | Sequence[ConfigEntry],
    input_dir: str | os.PathLike,
    result_dir: str | os.PathLike,
    settings: CampaignSettings | None = None,
) -> CampaignSummary:
    """Run every entry of ``config`` (text or parsed entries) on every file in ``input_dir``."""
    from .report import summarize

    settings = settings or CampaignSettings()
    entries = parse_config(config) if isinstance(config, str) else list(config)
    files = list_inputs(input_dir)
    if not files:
        raise ValueError(f"no input files in {input_dir}")
    result_dir = Path(result_dir)
    result_dir.mkdir(parents=True, exist_ok=True)
    if not os.access(result_dir, os.W_OK):
        raise PermissionError(f"result directory not writable: {result_dir}")

    plan = plan_campaign(entries, files, settings.campaign_seed)
    log.info("campaign: %d entries x %d inputs = %d tests", len(entries), len(files), len(plan))

    def run(t: PlannedTest) -> RunRecord:
        rec = execute_test(t.entry, t.inputs, settings, t.options, name=t.name,
                           test_seed=t.seed, entry_index=t.entry_index)
        if settings.recheck_hangs and rec.outcome.kind == HANG:
            again = execute_test(t.entry, t.inputs, settings, t.options, name=t.name + ".recheck",
                                 timeout=settings.timeout * settings.recheck_hangs,
                                 test_seed=t.seed, entry_index=t.entry_index)
            rec.recheck = again.outcome
        write_record(rec, result_dir)
        log.info("%s: %s", t.name, rec.outcome.describe())
        return rec

    if settings.workers > 1:
        with ThreadPoolExecutor(settings.workers) as pool:
            records = list(pool.map(run, plan))
    else:
        records = [run(t) for t in plan]

    orphans = audit_process_groups([r.pgid for r in records if r.pgid is not None])
    return CampaignSummary(records, summarize(records, settings.platform), orphans)


def audit_process_groups(pgids: Sequence[int]) -> list[int]:
    """Pids still alive in any of ``pgids``."""
    return [pid for g in pgids for pid in group_members(g)]


def main(argv: Sequence[str] | None = None) -> int:
    p = argparse.ArgumentParser(prog="refuzz-run", description="Run a fuzz campaign.")
    p.add_argument("config", help="campaign configuration file")
    p.add_argument("-i", dest="input_dir", required=True, help="directory of input files")
    p.add_argument("-o", dest="result_dir", required=True, help="directory for result records")
    p.add_argument("--timeout", type=float, default=300.0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="campaign seed")
    p.add_argument("--recheck-hangs", type=float, metavar="F",
                   help="re-run hangs with the timeout multiplied by F")
    p.add_argument("--platform", default=_platform.system(), help="label recorded in results")
    p.add_argument("--scratch", help="scratch root (default: a refuzz-scratch directory under the system temp dir)")
    p.add_argument("-v", "--verbose", action="store_true")
    ns = p.parse_args(None if argv is None else list(argv))
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(message)s")
    settings = CampaignSettings(timeout=ns.timeout, workers=ns.workers,
                                campaign_seed=ns.seed, platform=ns.platform,
                                recheck_hangs=ns.recheck_hangs, scratch_root=ns.scratch)
    try:
        summary = run_campaign(Path(ns.config).read_text(encoding="utf-8"),
                               ns.input_dir, ns.result_dir, settings)
    except (OSError, ValueError) as exc:
        print(f"refuzz-run: {exc}", file=sys.stderr)
        return 2
    st = summary.stats
    print(f"{len(summary.records)} tests, {st.failed} of {st.tested} utilities failed "
          f"({st.rate}%)")
    for name in sorted(summary.failed_utilities):
        print(f"  failed: {name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
