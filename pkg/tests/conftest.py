import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.path.name != "test_acceptance.py":
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        title = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance.append((title, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for title, passed in _acceptance:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {title}")
