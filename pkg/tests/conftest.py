import pytest

from primesums.sieve import build_sieve
from primesums.tables import build_tables

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, title = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key:>2}. {title}")


@pytest.fixture(scope="session")
def sieve6():
    return build_sieve(10**6)


@pytest.fixture(scope="session")
def tables6(sieve6):
    return build_tables(sieve6)


@pytest.fixture(scope="session")
def sieve4():
    return build_sieve(10**4)


@pytest.fixture(scope="session")
def tables4(sieve4):
    return build_tables(sieve4)
