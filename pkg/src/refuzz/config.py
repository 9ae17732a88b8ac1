"""Campaign configuration grammar and option-pool sampling.

One entry per line::

    {stdin|file|cp NAME|two_files|pty} cmd [fixed args...] [[pool...]] [quit="..."]

``#`` starts a comment line.  ``cp`` copies the input to ``NAME`` in the
test's scratch directory before running; ``quit`` is only valid for
``pty`` entries and uses the escapes understood by
:func:`refuzz.pty_driver.decode_quit`.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass

from .generator import SplitMix64
from .pty_driver import decode_quit, encode_quit

INPUT_MODES = ("stdin", "file", "cp", "two_files", "pty")


class ConfigError(ValueError):
    def __init__(self, message: str, line_no: int | None = None):
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(prefix + message)
        self.line_no = line_no


@dataclass(frozen=True)
class ConfigEntry:
    input_mode: str
    command: str
    fixed_args: tuple[str, ...] = ()
    option_pool: tuple[str, ...] = ()
    copy_target_name: str | None = None
    quit: bytes | None = None

    def __post_init__(self):
        if self.input_mode not in INPUT_MODES:
            raise ConfigError(f"unknown input mode {self.input_mode!r}")
        if (self.input_mode == "cp") != (self.copy_target_name is not None):
            raise ConfigError("copy target name is required for cp and only for cp")
        if self.quit is not None and self.input_mode != "pty":
            raise ConfigError("quit sequence is only allowed for pty entries")

    @property
    def utility(self) -> str:
        return self.command.rstrip("/").rsplit("/", 1)[-1]

    def render(self) -> str:
        """The entry as a config line; ``parse_config(e.render())`` gives back ``e``."""
        parts = [self.input_mode]
        if self.copy_target_name is not None:
            parts.append(shlex.quote(self.copy_target_name))
        parts.append(shlex.quote(self.command))
        parts += [shlex.quote(a) for a in self.fixed_args]
        if self.option_pool:
            parts.append("[" + " ".join(shlex.quote(o) for o in self.option_pool) + "]")
        if self.quit is not None:
            parts.append('quit="' + encode_quit(self.quit) + '"')
        return " ".join(parts)


def _parse_line(line: str, line_no: int | None = None) -> ConfigEntry:
    try:
        tokens = shlex.split(line, posix=True)
    except ValueError as exc:
        raise ConfigError(str(exc), line_no) from None
    mode = tokens.pop(0)
    if mode not in INPUT_MODES:
        raise ConfigError(f"unknown input mode {mode!r}", line_no)
    copy_name = None
    if mode == "cp":
        if len(tokens) < 2:
            raise ConfigError("cp needs a target file name and a command", line_no)
        copy_name = tokens.pop(0)
    if not tokens:
        raise ConfigError("missing command", line_no)

    quit = None
    if tokens and tokens[-1].startswith("quit="):
        try:
            quit = decode_quit(tokens.pop()[len("quit="):])
        except ValueError as exc:
            raise ConfigError(str(exc), line_no) from None

    command = tokens.pop(0)
    if command.startswith("["):
        raise ConfigError("missing command before option pool", line_no)
    fixed: list[str] = []
    pool: list[str] = []
    state = "fixed"  # -> "pool" -> "done"
    for tok in tokens:
        if state == "done":
            raise ConfigError(f"unexpected token after option pool: {tok!r}", line_no)
        if state == "fixed" and tok.startswith("["):
            state = "pool"
            tok = tok[1:]
        elif "[" in tok:
            raise ConfigError("nested '[' in option pool", line_no)
        if state == "pool":
            if tok.endswith("]"):
                tok = tok[:-1]
                state = "done"
            if "[" in tok or "]" in tok:
                raise ConfigError("unbalanced brackets", line_no)
            if tok:
                pool.append(tok)
        elif "]" in tok:
            raise ConfigError("']' without matching '['", line_no)
        else:
            fixed.append(tok)
    if state == "pool":
        raise ConfigError("unbalanced brackets: option pool not closed", line_no)
    try:
        return ConfigEntry(mode, command, tuple(fixed), tuple(pool), copy_name, quit)
    except ConfigError as exc:
        raise ConfigError(str(exc), line_no) from None


def parse_config(text: str) -> list[ConfigEntry]:
    entries = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entries.append(_parse_line(line, no))
    return entries


def select_options(pool, rng: SplitMix64) -> list[str]:
    """Keep each pool token with probability 1/2: one draw per token, kept when its top bit is set."""
    return [tok for tok in pool if rng.next() >> 63]
