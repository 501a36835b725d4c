"""Shared fixtures and the acceptance summary hook.

Each acceptance test maps to one numbered criterion; a report hook collects
one PASS/FAIL line per criterion and the terminal summary prints them even
under captured stdout, so a plain ``pytest -v`` run always shows the
per-criterion outcome.
"""

import re

import pytest

from ultrachain import PadicField, RationalField, TadicField, TrivialField

ACCEPTANCE_LINES = []

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


@pytest.fixture
def p2():
    return PadicField(2)


@pytest.fixture
def p3():
    return PadicField(3)


@pytest.fixture
def p5():
    return PadicField(5)


@pytest.fixture
def p7():
    return PadicField(7)


@pytest.fixture
def rationals():
    return RationalField()


@pytest.fixture
def trivial():
    return TrivialField()


@pytest.fixture
def tadic2():
    return TadicField(2)


@pytest.fixture
def tadic3():
    return TadicField(3)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    match = _CRITERION.search(item.name)
    if not match:
        return
    number, slug = int(match.group(1)), match.group(2).replace("_", " ")
    status = "PASS" if report.passed else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {number}: {status} - {slug}")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
