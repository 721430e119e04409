"""Shared pytest plumbing: the acceptance criteria summary section.

Acceptance tests report one pass/fail line per criterion; the lines are
echoed after the run so they stay visible even with output capturing on.
"""
from __future__ import annotations

CRITERION_LINES: list[str] = []


def record_criterion(line: str) -> None:
    CRITERION_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in CRITERION_LINES:
        terminalreporter.write_line(line)
