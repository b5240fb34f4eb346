import random

import pytest

from tdcrit import Graph, enumerate_connected_graphs

_CRITERIA = {}


@pytest.fixture(scope="session")
def connected_upto6():
    graphs = []
    for n in range(1, 7):
        graphs.extend(enumerate_connected_graphs(n))
    return graphs


@pytest.fixture(scope="session")
def connected_upto5(connected_upto6):
    return [G for G in connected_upto6 if G.n <= 5]


def random_connected(n, rng, p=0.45):
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        G = Graph(n, edges)
        if G.is_connected():
            return G


@pytest.fixture(scope="session")
def random_n7():
    rng = random.Random(20240607)
    return [random_connected(7, rng) for _ in range(200)]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        prev = _CRITERIA.get(num, (True, item.name))
        _CRITERIA[num] = (prev[0] and rep.outcome == "passed", item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        ok, name = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  ({name})")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
