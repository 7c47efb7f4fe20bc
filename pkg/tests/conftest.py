import re

_ACCEPTANCE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")
_outcomes: dict[int, str] = {}


def pytest_runtest_logreport(report):
    match = _ACCEPTANCE.search(report.nodeid)
    if not match:
        return
    number = int(match.group(1))
    if report.when == "call" or report.failed:
        _outcomes.setdefault(number, "PASS" if report.passed else "FAIL")
        if report.failed:
            _outcomes[number] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import TITLES

    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        terminalreporter.write_line(f"criterion {number:2d} {_outcomes[number]}: {TITLES[number]}")
