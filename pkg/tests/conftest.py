import numpy as np
import pytest

from bsymbol.algebra import field_of_size

FIELD_SIZES = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)

_criteria: dict[str, tuple[str, str]] = {}


@pytest.fixture(params=FIELD_SIZES, ids=lambda q: f"q{q}")
def field(request):
    return field_of_size(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = "test_criterion_"
    name = report.nodeid.rsplit("::", 1)[-1]
    if name.startswith(marker):
        label = name[len(marker):]
        _criteria[label] = ("PASS" if report.passed else "FAIL", report.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split("_", 1)[0])):
        status, _ = _criteria[label]
        number, _, title = label.partition("_")
        terminalreporter.write_line(f"criterion {number:>2} {title.replace('_', ' '):<32} {status}")
