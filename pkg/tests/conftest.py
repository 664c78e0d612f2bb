from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

CORPUS = Path(__file__).resolve().parent.parent / "src" / "rotadyck" / "corpus"
DATA = Path(__file__).resolve().parent / "data"


@pytest.fixture
def corpus():
    return CORPUS


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in range(1, 9):
        if number in test_acceptance.RESULTS:
            terminalreporter.write_line(test_acceptance.verdict_line(number))
