import pytest

from latticecount import kernels


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request):
    """Each available kernel backend in turn."""
    return kernels.backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        ok, line = RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {line}")
