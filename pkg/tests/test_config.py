import pytest

from refuzz.config import ConfigEntry, ConfigError, parse_config, select_options
from refuzz.generator import SplitMix64


def test_classic_example_lines():
    bc, as_, diff, gcc = parse_config(
        "stdin bc [-l -w -s -q]\n"
        "file as [-a -D -L -R -v -W -Z -w -x]\n"
        "two_files diff [-s -e -p -T]\n"
        "cp t.c gcc [-c -S -E]\n"
    )
    assert bc == ConfigEntry("stdin", "bc", (), ("-l", "-w", "-s", "-q"))
    assert as_ == ConfigEntry("file", "as", (), ("-a", "-D", "-L", "-R", "-v", "-W", "-Z", "-w", "-x"))
    assert diff == ConfigEntry("two_files", "diff", (), ("-s", "-e", "-p", "-T"))
    assert gcc == ConfigEntry("cp", "gcc", (), ("-c", "-S", "-E"), copy_target_name="t.c")


def test_pool_optional_and_fixed_args():
    assert parse_config("file as")[0] == ConfigEntry("file", "as")
    e = parse_config("stdin sort -n -r [ -u -f ]")[0]
    assert e.fixed_args == ("-n", "-r") and e.option_pool == ("-u", "-f")
    assert parse_config("stdin wc []")[0].option_pool == ()
    assert parse_config("stdin wc [-l]")[0].option_pool == ("-l",)


def test_comments_and_blank_lines():
    text = "# header\n\n   \nstdin cat\n  # indented comment\nfile wc\n"
    assert [e.command for e in parse_config(text)] == ["cat", "wc"]


def test_pty_quit():
    e = parse_config('pty vim [-A -b -d] quit="\\e:q!\\n"')[0]
    assert e.input_mode == "pty" and e.quit == b"\x1b:q!\n"
    assert e.option_pool == ("-A", "-b", "-d")


@pytest.mark.parametrize("line", [
    "stdio bc",
    "cp gcc",
    "stdin bc [-l -w",
    "stdin bc -l]",
    "stdin bc [-l [-w]]",
    "stdin bc [-l] -x",
    'stdin bc quit="\\e"',
    "stdin [-l]",
    'stdin bc "unterminated',
])
def test_errors(line):
    with pytest.raises(ConfigError):
        parse_config(line)


def test_error_reports_line_number():
    with pytest.raises(ConfigError, match="line 3"):
        parse_config("stdin a\nfile b\nbogus c\n")


@pytest.mark.parametrize("line", [
    "stdin bc [-l -w -s -q]",
    "cp t.c gcc -O2 [-c -S -E]",
    'pty vim [-A] quit="\\e:q!\\x5c\\x22"',
    "file 'my tool' 'a b' ['-x y']",
])
def test_render_roundtrip(line):
    e = parse_config(line)[0]
    assert parse_config(e.render())[0] == e


def test_select_options_empty():
    assert select_options([], SplitMix64(1)) == []


def test_select_options_replay_and_order():
    pool = ["-a", "-b", "-c", "-d", "-e", "-f"]
    first = [select_options(pool, SplitMix64(s)) for s in range(50)]
    again = [select_options(pool, SplitMix64(s)) for s in range(50)]
    assert first == again
    for chosen in first:
        assert chosen == [p for p in pool if p in chosen]


def test_select_options_uses_top_bit():
    class Fixed(SplitMix64):
        def __init__(self, draws):
            super().__init__()
            self.draws = iter(draws)

        def next(self):
            return next(self.draws)

    draws = [1 << 63, (1 << 63) - 1, 2**64 - 1, 0]
    assert select_options(["-a", "-b", "-c", "-d"], Fixed(draws)) == ["-a", "-c"]


def test_select_options_frequency():
    rng = SplitMix64(2024)
    pool = ["-l", "-w", "-s", "-q"]
    counts = dict.fromkeys(pool, 0)
    for _ in range(10_000):
        for tok in select_options(pool, rng):
            counts[tok] += 1
    for c in counts.values():
        assert 0.48 <= c / 10_000 <= 0.52
