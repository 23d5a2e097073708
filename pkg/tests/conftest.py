import re
from collections import defaultdict

import pytest

_CRITERION = re.compile(r"test_acceptance\.py.*criterion_(\d+)")


@pytest.hookimpl
def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per numbered acceptance criterion."""
    outcomes: dict[int, set[str]] = defaultdict(set)
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            match = _CRITERION.search(report.nodeid)
            if match:
                outcomes[int(match.group(1))].add(status)
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(outcomes):
        verdict = "PASS" if outcomes[number] == {"passed"} else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}")
