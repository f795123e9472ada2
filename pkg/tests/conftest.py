import pytest

from zmn_subgroups.arith import build_tables
from zmn_subgroups.constants import build_bank

# (criterion id, passed, detail) appended by test_acceptance.py
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def tables():
    return build_tables(300_000)


@pytest.fixture(scope="session")
def bank():
    return build_bank(50)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for cid, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{cid:<5} {'PASS' if ok else 'FAIL'}  {detail}")
