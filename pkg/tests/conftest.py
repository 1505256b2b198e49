import math

import pytest

from normaltiling.generators import disclination_patch, hex_patch
from normaltiling.layout import realize_layout

HEX_AREA = 3 * math.sqrt(3) / 2

_acceptance = []


@pytest.fixture(scope="session")
def hex8():
    return hex_patch(8)


@pytest.fixture(scope="session")
def realized_disclination():
    t, report = realize_layout(disclination_patch(4, 1))
    return t, report


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}")
