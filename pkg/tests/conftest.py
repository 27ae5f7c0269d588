import pytest

from reqho.ladder import trinity_for
from reqho.scheme import Scheme

SIMPLEST = Scheme.alpha([2])
PSI4 = Scheme.alpha([4])
TWO_LEVEL = Scheme.alpha([2, 3])
FIGURE1 = Scheme.alpha([2, 5, 6, 7])


@pytest.fixture(scope="session")
def simplest():
    return trinity_for(SIMPLEST)


@pytest.fixture(scope="session")
def psi4():
    return trinity_for(PSI4)


@pytest.fixture(scope="session")
def two_level():
    return trinity_for(TWO_LEVEL)


@pytest.fixture(scope="session")
def figure1():
    return trinity_for(FIGURE1)


# one line per acceptance criterion, collected by tests/test_acceptance.py
AC_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not AC_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(AC_LINES):
        terminalreporter.write_line(AC_LINES[key])
