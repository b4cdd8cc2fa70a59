from __future__ import annotations

import os

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

# acceptance outcomes, printed after the run
CRITERIA: dict[str, str] = {}


def record(name: str, passed: bool, detail: str = "") -> str:
    line = f"{name}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip()
    CRITERIA[name] = line
    print(line)
    return line


@pytest.fixture
def data_dir():
    return DATA_DIR


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[key])
