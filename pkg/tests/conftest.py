"""Shared test plumbing: the acceptance criteria report.

Acceptance tests register one line per criterion; the lines are echoed in
the terminal summary so the pass/fail table is visible regardless of
pytest's output capturing.
"""

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def report():
    def _report(criterion, ok, detail):
        line = f"criterion {criterion:2d} {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append((criterion, line))
        print(line)

    return _report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
