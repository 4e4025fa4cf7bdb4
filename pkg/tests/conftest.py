import pytest

from xbialg import EXAMPLES, ProjectionSystem, build_bialgebra, example

GALLERY = tuple(EXAMPLES)


@pytest.fixture(scope="session")
def gallery():
    return {n: example(n) for n in GALLERY}


@pytest.fixture(scope="session")
def built(gallery):
    return {n: build_bialgebra(d) for n, d in gallery.items()}


@pytest.fixture(scope="session")
def canonical(gallery):
    return {n: ProjectionSystem.canonical(d) for n, d in gallery.items()}


# one summary line per acceptance criterion, ANDed over its tests
_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and not rep.failed):
        return
    number, title = mark.args
    ok = _criteria.get(number, (title, True))[1]
    _criteria[number] = (title, ok and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}")
