import warnings

import pytest

from perssw.fixtures import FIXTURES

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, detail: str) -> None:
        ACCEPTANCE[number] = (passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")


@pytest.fixture(params=sorted(FIXTURES))
def fixture_case(request):
    fn, n = FIXTURES[request.param]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return request.param, fn(), n
