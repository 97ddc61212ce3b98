from importlib import resources
from pathlib import Path

import pytest

from phonovec import SoundCatalog, SoundVectors
from phonovec.cli import sample_sounds

DATA = Path(str(resources.files("phonovec") / "data"))
WORDLISTS = DATA / "wordlists"


@pytest.fixture(scope="session")
def model():
    return SoundVectors.default()


@pytest.fixture(scope="session")
def catalog():
    return SoundCatalog.default()


@pytest.fixture(scope="session")
def consonants():
    return sample_sounds("consonants")


@pytest.fixture(scope="session")
def vowels():
    return sample_sounds("vowels")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, summary): acceptance criterion")
    config._criteria = {}


def pytest_collection_modifyitems(config, items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            config._criteria[item.nodeid] = [mark.args[0], mark.args[1], "FAIL"]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    entry = item.config._criteria.get(item.nodeid)
    if entry is None:
        return
    if report.failed:
        entry[2] = "FAIL"
    elif report.when == "call" and report.passed:
        entry[2] = "PASS"


def pytest_terminal_summary(terminalreporter, config):
    if not config._criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, summary, status in sorted(config._criteria.values()):
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {summary}")
