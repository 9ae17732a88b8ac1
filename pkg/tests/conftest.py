import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from refuzz.specimens import build  # noqa: E402

_acceptance = {}


@pytest.fixture(scope="session")
def specimen_bin(tmp_path_factory):
    """name -> path of every specimen executable, built once per session."""
    paths = build(tmp_path_factory.mktemp("bin"))
    return {name: str(p) for name, p in paths.items()}


@pytest.fixture
def scratch(tmp_path):
    d = tmp_path / "scratch"
    d.mkdir()
    return d


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _acceptance[report.nodeid] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance.items():
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
