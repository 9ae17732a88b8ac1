"""Random input corpus: size x character set x newline treatment.

Every file is produced by :func:`refuzz.generator.generate_stream` from a
seed derived from the base seed, the category name and the file index, so
any single category can be regenerated on its own.  A ``MANIFEST.tsv``
beside the files records path, digest, size and the generator arguments.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from . import __version__
from .generator import GenSpec, generate_stream, parse_gen_cli, splitmix64_next

MAX_LINE_LEN = 100
MANIFEST_NAME = "MANIFEST.tsv"


@dataclass(frozen=True)
class SizeClass:
    name: str
    byte_count: int
    line_count: int
    max_line_len: int = MAX_LINE_LEN


SIZES = {
    "small": SizeClass("small", 1_000, 10),
    "medium": SizeClass("medium", 100_000, 1_000),
    "large": SizeClass("large", 10_000_000, 100_000),
    "huge": SizeClass("huge", 100_000_000, 1_000_000),
}
SIZE_ABBREV = {"s": "small", "m": "medium", "l": "large", "h": "huge"}

# charset axis -> (generator charset, include NUL)
CHARSETS = {
    "all_with_nul": ("all_8bit", True),
    "all_without_nul": ("all_8bit", False),
    "printable": ("printable", False),
}
NEWLINE_MODES = ("lines", "raw")


def _stable_hash64(text: str) -> int:
    return int.from_bytes(hashlib.blake2b(text.encode(), digest_size=8).digest(), "big")


def category_name(size: str, charset: str, newline: str) -> str:
    return f"{size}_{charset}_{newline}"


def file_seed(category: str, index: int, base_seed: int) -> int:
    _, seed = splitmix64_next(base_seed ^ _stable_hash64(f"{category}:{index}"))
    return seed


def category_spec(size: SizeClass | str, charset: str, newline_mode: str,
                  file_index: int, base_seed: int) -> GenSpec:
    if isinstance(size, str):
        size = SIZES[size]
    base, nul = CHARSETS[charset]
    if newline_mode not in NEWLINE_MODES:
        raise ValueError(f"unknown newline mode {newline_mode!r}")
    seed = file_seed(category_name(size.name, charset, newline_mode), file_index, base_seed)
    if newline_mode == "lines":
        return GenSpec(size.line_count, base, nul, line_mode_max=size.max_line_len, seed=seed)
    return GenSpec(size.byte_count, base, nul, seed=seed)


@dataclass
class CorpusPlan:
    sizes: Sequence[str] = tuple(SIZES)
    charsets: Sequence[str] = tuple(CHARSETS)
    newline_modes: Sequence[str] = NEWLINE_MODES
    files_per_category: int = 5
    base_seed: int = 0
    output_dir: str | os.PathLike = "corpus"

    def __post_init__(self):
        for name, values, allowed in (("sizes", self.sizes, SIZES),
                                      ("charsets", self.charsets, CHARSETS),
                                      ("newline_modes", self.newline_modes, NEWLINE_MODES)):
            if not values:
                raise ValueError(f"{name} must be non-empty")
            bad = [v for v in values if v not in allowed]
            if bad:
                raise ValueError(f"unknown {name}: {', '.join(bad)}")
        if self.files_per_category < 1:
            raise ValueError("files_per_category must be >= 1")

    def jobs(self) -> list[tuple[str, GenSpec]]:
        out = []
        for size in self.sizes:
            for cs in self.charsets:
                for nl in self.newline_modes:
                    for i in range(self.files_per_category):
                        name = f"{category_name(size, cs, nl)}_{i}"
                        out.append((name, category_spec(size, cs, nl, i, self.base_seed)))
        return out


@dataclass(frozen=True)
class ManifestEntry:
    path: str
    digest: str
    size: int
    spec: GenSpec


@dataclass
class CorpusManifest:
    entries: list[ManifestEntry] = field(default_factory=list)
    base_seed: int = 0
    tool_version: str = __version__

    def dumps(self) -> str:
        lines = [f"# refuzz corpus manifest\tbase_seed={self.base_seed}\ttool=refuzz {self.tool_version}"]
        for e in sorted(self.entries, key=lambda e: e.path):
            lines.append(f"{e.path}\t{e.digest}\t{e.size}\t{e.spec.render()}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> CorpusManifest:
        m = cls()
        for line in text.splitlines():
            if line.startswith("#"):
                for item in line[1:].split("\t"):
                    key, _, value = item.strip().partition("=")
                    if key == "base_seed":
                        m.base_seed = int(value)
                    elif key == "tool":
                        m.tool_version = value.split()[-1]
                continue
            if not line.strip():
                continue
            path, digest, size, rendered = line.split("\t")
            m.entries.append(ManifestEntry(path, digest, int(size), parse_gen_cli(rendered.split())))
        return m


class CorpusBuildError(RuntimeError):
    def __init__(self, message: str, partial: CorpusManifest):
        super().__init__(message)
        self.partial = partial


class _DigestSink:
    def __init__(self, fh):
        self.fh = fh
        self.hash = hashlib.sha256()

    def write(self, data: bytes) -> int:
        self.hash.update(data)
        return self.fh.write(data)

    def flush(self) -> None:
        self.fh.flush()


def write_spec_file(path: Path, spec: GenSpec) -> tuple[str, int]:
    """Generate ``spec`` into ``path`` atomically; return (digest, size)."""
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "wb") as fh:
            sink = _DigestSink(fh)
            size = generate_stream(spec, sink)
        os.replace(tmp, path)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise
    return "sha256:" + sink.hash.hexdigest(), size


def build_corpus(plan: CorpusPlan, workers: int = 1) -> CorpusManifest:
    """Write every file of ``plan`` plus ``MANIFEST.tsv`` into ``plan.output_dir``.

    On an I/O failure the files already written are recorded in
    ``MANIFEST.partial.tsv`` and :class:`CorpusBuildError` is raised.
    """
    out = Path(plan.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = CorpusManifest(base_seed=plan.base_seed)

    def one(job):
        name, spec = job
        digest, size = write_spec_file(out / name, spec)
        return ManifestEntry(name, digest, size, spec)

    jobs = plan.jobs()
    try:
        if workers > 1:
            with ThreadPoolExecutor(workers) as pool:
                futures = [pool.submit(one, j) for j in jobs]
                errors = []
                for fut in futures:
                    try:
                        manifest.entries.append(fut.result())
                    except OSError as exc:
                        errors.append(exc)
                if errors:
                    raise errors[0]
        else:
            for job in jobs:
                manifest.entries.append(one(job))
    except OSError as exc:
        (out / "MANIFEST.partial.tsv").write_text(manifest.dumps())
        raise CorpusBuildError(
            f"corpus build aborted after {len(manifest.entries)} of {len(jobs)} files: {exc}",
            manifest,
        ) from exc
    (out / MANIFEST_NAME).write_text(manifest.dumps())
    return manifest


def read_manifest(directory: str | os.PathLike) -> CorpusManifest:
    return CorpusManifest.loads((Path(directory) / MANIFEST_NAME).read_text())


def file_digest(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return "sha256:" + h.hexdigest()


def verify_corpus(directory: str | os.PathLike) -> list[str]:
    """Check the manifest against the directory; return a list of problems (empty when sound)."""
    directory = Path(directory)
    manifest = read_manifest(directory)
    problems = []
    listed = set()
    for e in manifest.entries:
        listed.add(e.path)
        p = directory / e.path
        if not p.is_file():
            problems.append(f"missing: {e.path}")
            continue
        if p.stat().st_size != e.size:
            problems.append(f"size mismatch: {e.path}")
        if file_digest(p) != e.digest:
            problems.append(f"digest mismatch: {e.path}")
    for p in directory.iterdir():
        if p.is_file() and not p.name.startswith("MANIFEST") and p.name not in listed:
            problems.append(f"unlisted: {p.name}")
    return problems


def _split(text: str, abbrev: dict | None = None) -> list[str]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    return [abbrev.get(t, t) for t in items] if abbrev else items


def main(argv: Iterable[str] | None = None) -> int:
    p = argparse.ArgumentParser(prog="refuzz-corpus", description="Generate the random input corpus.")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--sizes", default="s,m,l,h", help="comma list from small,medium,large,huge (or s,m,l,h)")
    p.add_argument("--charsets", default=",".join(CHARSETS))
    p.add_argument("--newline", default=",".join(NEWLINE_MODES))
    p.add_argument("--per-category", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    ns = p.parse_args(None if argv is None else list(argv))
    try:
        plan = CorpusPlan(_split(ns.sizes, SIZE_ABBREV), _split(ns.charsets), _split(ns.newline),
                          ns.per_category, ns.seed, ns.out)
    except ValueError as exc:
        p.error(str(exc))
    try:
        manifest = build_corpus(plan, ns.workers)
    except CorpusBuildError as exc:
        print(f"refuzz-corpus: {exc}", file=sys.stderr)
        return 1
    print(f"refuzz-corpus: wrote {len(manifest.entries)} files to {ns.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
