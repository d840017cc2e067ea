import pytest

from qhilb.fields import GF, QQ

# filled by tests/test_acceptance.py, reported after the run
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture(params=["q", "fp5"], ids=["QQ", "GF5"])
def field(request):
    return QQ if request.param == "q" else GF(5)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
