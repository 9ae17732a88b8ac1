"""Deterministic random byte streams in the style of the classic ``fuzz`` tool.

The stream is a pure function of the effective seed and the generation
parameters.  Draws come from SplitMix64; indices into the character set are
taken by rejection sampling so every symbol is exactly equiprobable.

Example::

    >>> import io
    >>> spec = GenSpec(length=8, charset_base="printable", seed=42)
    >>> buf = io.BytesIO()
    >>> generate_stream(spec, buf)
    8
"""

from __future__ import annotations

import argparse
import secrets
import sys
import time
from dataclasses import dataclass, replace
from typing import BinaryIO, Sequence

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB

PRINTABLE = bytes(range(0x20, 0x7F))
ALL_8BIT = bytes(range(0x01, 0x100))
CHARSET_BASES = ("printable", "all_8bit")

_CHUNK = 1 << 16


def splitmix64_mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def splitmix64_next(state: int) -> tuple[int, int]:
    """Advance ``state`` once; return ``(new_state, output)``."""
    state = (state + GOLDEN_GAMMA) & MASK64
    return state, splitmix64_mix(state)


class SplitMix64:
    """SplitMix64 generator state.

    ``next()`` returns one 64-bit draw; ``block(n)`` returns the next ``n``
    draws as a ``uint64`` array and is equivalent to ``n`` calls of ``next()``.
    """

    def __init__(self, state: int = 0):
        self.state = state & MASK64

    def __repr__(self) -> str:
        return f"SplitMix64(state=0x{self.state:016x})"

    def next(self) -> int:
        self.state, out = splitmix64_next(self.state)
        return out

    def block(self, n: int) -> np.ndarray:
        steps = np.arange(1, n + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            z = np.uint64(self.state) + steps * np.uint64(GOLDEN_GAMMA)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
        z ^= z >> np.uint64(31)
        self.state = (self.state + n * GOLDEN_GAMMA) & MASK64
        return z


def rejection_limit(k: int) -> int | None:
    """Largest multiple of ``k`` not above 2**64, or None when nothing is rejected."""
    limit = ((1 << 64) // k) * k
    return None if limit == 1 << 64 else limit


def next_index(rng: SplitMix64, k: int) -> int:
    limit = rejection_limit(k)
    while True:
        u = rng.next()
        if limit is None or u < limit:
            return u % k


def next_byte(rng: SplitMix64, charset: bytes) -> int:
    """Draw one byte uniformly from ``charset`` (ascending, non-empty)."""
    if not charset:
        raise ValueError("charset must be non-empty")
    return charset[next_index(rng, len(charset))]


class IndexStream:
    """Buffered accepted-index view of a SplitMix64 sequence.

    ``take(n, k)`` yields the same indices as ``n`` successive
    :func:`next_index` calls, but in bulk.
    """

    def __init__(self, rng: SplitMix64, block: int = _CHUNK):
        self.rng = rng
        self.block_size = block
        self._buf = np.empty(0, dtype=np.uint64)
        self._pos = 0

    def _available(self, n: int) -> np.ndarray:
        have = len(self._buf) - self._pos
        if have < n:
            fresh = self.rng.block(max(n - have, self.block_size))
            self._buf = np.concatenate([self._buf[self._pos:], fresh])
            self._pos = 0
        return self._buf[self._pos:]

    def take(self, n: int, k: int) -> np.ndarray:
        limit = rejection_limit(k)
        parts = []
        while n > 0:
            cand = self._available(n)[:n]
            self._pos += n
            if limit is not None:
                cand = cand[cand < np.uint64(limit)]
            parts.append(cand % np.uint64(k))
            n -= len(cand)
        if len(parts) == 1:
            return parts[0]
        return np.concatenate(parts) if parts else np.empty(0, dtype=np.uint64)

    def take_lines(self, max_lines: int, line_max: int, charset: np.ndarray) -> tuple[bytes, int]:
        """Emit up to ``max_lines`` whole lines from the buffered draws.

        Fast path for line mode: when the buffered block holds no draw that
        either rejection bound would discard, line boundaries are found with
        one Python step per line and bodies are mapped in bulk.  Otherwise a
        single line is produced through :meth:`take`.
        """
        klen = line_max + 1
        kbody = len(charset)
        block = self._available(min(self.block_size, max_lines * (line_max + 1)))
        bad = np.zeros(len(block), dtype=bool)
        for k in (klen, kbody):
            limit = rejection_limit(k)
            if limit is not None:
                bad |= block >= np.uint64(limit)
        if bad.any():
            n = int(self.take(1, klen)[0])
            body = charset[self.take(n, kbody)].tobytes()
            return body + b"\n", 1

        lens = (block % np.uint64(klen)).tolist()
        total = len(block)
        pos = 0
        lines = 0
        while lines < max_lines and pos < total:
            nxt = pos + 1 + lens[pos]
            if nxt > total:
                break
            pos = nxt
            lines += 1
        if lines == 0:
            # block too short for one line; grow it and retry
            self._available(total + line_max + 1)
            return b"", 0
        mapped = charset[block[:pos] % np.uint64(kbody)]
        mapped[np.array(_line_starts(lens, lines), dtype=np.intp)] = 0x0A
        self._pos += pos
        return mapped[1:].tobytes() + b"\n", lines


def _line_starts(lens: list, lines: int) -> list[int]:
    starts = []
    pos = 0
    for _ in range(lines):
        starts.append(pos)
        pos += 1 + lens[pos]
    return starts


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one random stream.

    ``length`` counts bytes, or newline-terminated lines when
    ``line_mode_max`` is set.  ``inter_byte_delay`` is in milliseconds.
    """

    length: int
    charset_base: str = "all_8bit"
    include_nul: bool = False
    line_mode_max: int | None = None
    seed: int = 0
    seed_modulus: int | None = None
    inter_byte_delay: float | None = None

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f"length must be non-negative, got {self.length}")
        if self.charset_base not in CHARSET_BASES:
            raise ValueError(f"unknown charset {self.charset_base!r}")
        if self.line_mode_max is not None and self.line_mode_max < 1:
            raise ValueError("line_mode_max must be >= 1")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.seed_modulus is not None and self.seed_modulus < 1:
            raise ValueError("seed_modulus must be >= 1")
        if self.inter_byte_delay is not None and self.inter_byte_delay < 0:
            raise ValueError("inter_byte_delay must be non-negative")

    @property
    def effective_seed(self) -> int:
        if self.seed_modulus is None:
            return self.seed
        return self.seed % self.seed_modulus

    @property
    def charset(self) -> bytes:
        base = PRINTABLE if self.charset_base == "printable" else ALL_8BIT
        return (b"\x00" + base) if self.include_nul else base

    @property
    def body_charset(self) -> bytes:
        """Bytes drawn for content; line mode reserves the newline for terminators."""
        if self.line_mode_max is None:
            return self.charset
        return self.charset.replace(b"\n", b"")

    def render(self) -> str:
        """Command-line form, e.g. ``1000 -p -s 42``."""
        parts = [str(self.length), "-p" if self.charset_base == "printable" else "-a"]
        if self.include_nul:
            parts.append("-0")
        if self.line_mode_max is not None:
            parts += ["-l", str(self.line_mode_max)]
        parts += ["-s", str(self.seed)]
        if self.seed_modulus is not None:
            parts += ["-m", str(self.seed_modulus)]
        if self.inter_byte_delay is not None:
            parts += ["-d", f"{self.inter_byte_delay:g}"]
        return " ".join(parts)


class StreamWriteError(OSError):
    """Sink failure; ``emitted`` is the byte count written before it."""

    def __init__(self, emitted: int, cause: OSError):
        super().__init__(cause.errno, f"sink write failed after {emitted} bytes: {cause}")
        self.emitted = emitted
        self.cause = cause


def iter_chunks(spec: GenSpec):
    """Yield the stream for ``spec`` as a sequence of byte chunks."""
    rng = SplitMix64(spec.effective_seed)
    src = IndexStream(rng)
    table = np.frombuffer(spec.body_charset, dtype=np.uint8).copy()
    k = len(table)
    remaining = spec.length
    if spec.line_mode_max is None:
        while remaining:
            n = min(remaining, _CHUNK)
            yield table[src.take(n, k)].tobytes()
            remaining -= n
    else:
        while remaining:
            data, lines = src.take_lines(remaining, spec.line_mode_max, table)
            remaining -= lines
            if data:
                yield data


def generate_stream(spec: GenSpec, sink: BinaryIO) -> int:
    """Write the stream for ``spec`` to ``sink``; return the number of bytes written."""
    emitted = 0
    delay = (spec.inter_byte_delay or 0) / 1000.0
    try:
        for chunk in iter_chunks(spec):
            if delay:
                for i in range(len(chunk)):
                    sink.write(chunk[i:i + 1])
                    sink.flush()
                    emitted += 1
                    time.sleep(delay)
            else:
                sink.write(chunk)
                emitted += len(chunk)
    except OSError as exc:
        raise StreamWriteError(emitted, exc) from exc
    return emitted


def generate_bytes(spec: GenSpec) -> bytes:
    """Whole stream in memory; convenient for small specs and tests."""
    return b"".join(iter_chunks(replace(spec, inter_byte_delay=None)))


class GenCliError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise GenCliError(message)


def _nonneg_int(text: str) -> int:
    value = int(text, 0)
    if value < 0:
        raise ValueError(text)
    return value


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="refuzz-gen", description="Emit a random byte stream on stdout.")
    p.add_argument("length", type=_nonneg_int, help="bytes, or lines with -l")
    cs = p.add_mutually_exclusive_group()
    cs.add_argument("-p", dest="printable", action="store_true", help="printable ASCII only")
    cs.add_argument("-a", dest="all8", action="store_true", help="full 8-bit set (default)")
    p.add_argument("-0", dest="nul", action="store_true", help="include the NUL byte")
    p.add_argument("-l", dest="line_max", type=_nonneg_int, metavar="MAX",
                   help="newline-terminated lines of up to MAX characters")
    p.add_argument("-s", dest="seed", type=_nonneg_int, metavar="SEED")
    p.add_argument("-m", dest="modulus", type=_nonneg_int, metavar="MOD")
    p.add_argument("-d", dest="delay", type=float, metavar="MS", help="delay between bytes")
    return p


def parse_gen_cli(args: Sequence[str], stderr=None) -> GenSpec:
    """Parse ``fuzz``-style arguments into a :class:`GenSpec`.

    A missing ``-s`` draws the seed from system entropy and reports it on
    ``stderr`` so the run can be repeated.
    """
    ns = _build_parser().parse_args(list(args))
    if ns.modulus == 0:
        raise GenCliError("modulus must be positive")
    if ns.line_max == 0:
        raise GenCliError("line length maximum must be positive")
    seed = ns.seed
    if seed is None:
        seed = secrets.randbits(64)
        print(f"refuzz-gen: seed={seed}", file=stderr or sys.stderr)
    try:
        return GenSpec(
            length=ns.length,
            charset_base="printable" if ns.printable else "all_8bit",
            include_nul=ns.nul,
            line_mode_max=ns.line_max,
            seed=seed,
            seed_modulus=ns.modulus,
            inter_byte_delay=ns.delay,
        )
    except ValueError as exc:
        raise GenCliError(str(exc)) from exc


def main(argv: Sequence[str] | None = None) -> int:
    try:
        spec = parse_gen_cli(sys.argv[1:] if argv is None else argv)
    except GenCliError as exc:
        print(f"refuzz-gen: {exc}", file=sys.stderr)
        return 2
    try:
        generate_stream(spec, sys.stdout.buffer)
        sys.stdout.buffer.flush()
    except StreamWriteError as exc:
        if exc.errno == 32:  # EPIPE: reader went away
            return 0
        print(f"refuzz-gen: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
