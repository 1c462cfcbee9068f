import pytest

from pcyclic import make_field

STATED_MODULI = {
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
}

_cache: dict = {}


def field(p, m, modulus=None):
    """Cached field contexts; tables for q = 3125 take a moment to build."""
    key = (p, m, modulus)
    if key not in _cache:
        _cache[key] = make_field(p, m, modulus)
    return _cache[key]


@pytest.fixture
def gf():
    return field


# one pass/fail line per acceptance criterion, printed after the run

import re

_criteria: dict[int, list[bool]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion(\d+)_", report.nodeid)
    if m and (report.when == "call" or report.failed):
        _criteria.setdefault(int(m.group(1)), []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        res = _criteria[n]
        verdict = "PASS" if all(res) else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict} ({sum(res)}/{len(res)} cases passed)")
