import pytest

from umbralhyp import _core_py

try:
    from umbralhyp import _core
except ImportError:
    _core = None

KERNELS = [pytest.param(_core_py, id="python")]
if _core is not None:
    KERNELS.append(pytest.param(_core, id="compiled"))


@pytest.fixture(params=KERNELS)
def kernel(request):
    return request.param


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if rep.when == "call" or rep.failed:
        prev = _criteria.get(number, (title, True))
        _criteria[number] = (title, prev[1] and not rep.failed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}")
