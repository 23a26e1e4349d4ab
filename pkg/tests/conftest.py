import pytest

from pointideal.order import TermOrder

_ACCEPTANCE_LINES = []


@pytest.fixture
def report_criterion():
    def record(number, passed, detail):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def lex2():
    return TermOrder("lex", 2)


@pytest.fixture
def lex3():
    return TermOrder("lex", 3)
