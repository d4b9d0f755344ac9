import pytest

from metrize import WeightedGraph, quadrilateral

_criteria = []


@pytest.fixture
def quad():
    return quadrilateral(1, 2, 3, 4)


@pytest.fixture
def triangle_113():
    return WeightedGraph.from_edges([("a", "b", 1), ("b", "c", 1), ("a", "c", 3)])


@pytest.fixture
def triangle_pendant():
    return WeightedGraph.from_edges([("a", "b", 1), ("b", "c", 1), ("a", "c", 1), ("c", "d", 2)])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and rep.when == "call":
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _criteria.append((rep.outcome, doc))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for outcome, doc in _criteria:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {doc}")
