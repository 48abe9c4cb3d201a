"""Collects acceptance outcomes and prints one line per criterion at the end of the run.

Tests in test_acceptance.py carry ``@pytest.mark.criterion("ACk")``; every other
test counts toward AC12 (the infrastructure property suites).
"""

from collections import defaultdict

import pytest

CRITERIA = [f"AC{k}" for k in range(1, 13)]
_outcomes = defaultdict(list)
_details = defaultdict(list)


def _criterion_of(item) -> str:
    mark = item.get_closest_marker("criterion")
    return mark.args[0] if mark else "AC12"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criterion = _criterion_of(item)


def pytest_runtest_logreport(report):
    cid = getattr(report, "criterion", None)
    if cid is None:
        return
    if report.when == "call" or report.failed:
        if report.skipped:
            return
        _outcomes[cid].append((report.nodeid, report.passed))
        for key, value in report.user_properties:
            if key == "detail":
                _details[cid].append(value)


def pytest_terminal_summary(terminalreporter):
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in CRITERIA:
        results = _outcomes.get(cid)
        if not results:
            tr.write_line(f"{cid:<5} NOT RUN")
            continue
        failed = [n for n, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"{cid:<5} {status}  ({len(results) - len(failed)}/{len(results)} checks)")
        for d in _details.get(cid, []):
            tr.write_line(f"        {d}")
