"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_results: dict[str, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.name.startswith("test_criterion_"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _results[item.nodeid] = (doc, report.passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _results:
        terminalreporter.section("acceptance criteria")
        for doc, passed in _results.values():
            terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {doc}")
