import pytest

from kswap import Graph, MicroTable


@pytest.fixture(scope="session")
def table():
    return MicroTable.build()


@pytest.fixture
def c5():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def k6():
    return Graph.complete(6)


_acceptance_results = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance_results.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    # one pass/fail line per acceptance criterion
    if _acceptance_results:
        terminalreporter.section("acceptance criteria")
        for name, outcome in _acceptance_results:
            verdict = "PASS" if outcome == "passed" else outcome.upper()
            terminalreporter.write_line(f"{name}: {verdict}")
