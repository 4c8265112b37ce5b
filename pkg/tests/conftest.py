import pytest

from qaff.hopf_fibration import fibration
from qaff.scalars import Mu

MU_LABELS = ("sym", "1/2", "-1", "1")


@pytest.fixture(params=MU_LABELS)
def mu(request):
    return Mu.parse(request.param)


@pytest.fixture(params=MU_LABELS)
def bundle(request):
    return fibration(request.param)


@pytest.fixture
def sym_bundle():
    return fibration("sym")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
