import json
from pathlib import Path

import pytest

from quadlie import from_json

FORMS_DIR = Path(__file__).resolve().parent.parent / "demos" / "forms"
FOUR = ("a2", "a3", "a1tilde", "a1_corank2")


def load(name):
    return from_json(FORMS_DIR / f"{name}.json")


@pytest.fixture
def forms_dir():
    return FORMS_DIR


@pytest.fixture
def a2():
    return load("a2")


@pytest.fixture
def a1t():
    return load("a1tilde")


@pytest.fixture
def corank2():
    return load("a1_corank2")


# one PASS/FAIL line per acceptance criterion at the end of the run

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    ok = rep.passed if rep.when == "call" else not rep.failed
    prev = _criteria.get(number, (title, True))
    _criteria[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}")
