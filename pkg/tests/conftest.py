import itertools
import random

import pytest

from dompoly.graph import SimpleGraph


def naive_counts(g: SimpleGraph) -> list[int]:
    """Dominating k-set counts by itertools.combinations and neighbor sets."""
    nbrs = {v: {v} | g.neighbors(v) for v in g.vertices}
    counts = [0] * (g.n + 1)
    for k in range(1, g.n + 1):
        for d in itertools.combinations(g.vertices, k):
            ds = set(d)
            if all(nbrs[v] & ds for v in g.vertices):
                counts[k] += 1
    return counts


def naive_digraph_counts(u1, u2, arcs) -> list[int]:
    left = sorted(u1)
    counts = [0] * (len(left) + 1)
    for k in range(len(left) + 1):
        for d in itertools.combinations(left, k):
            covered = {j for i, j in arcs if i in d}
            if set(u2) <= covered:
                counts[k] += 1
    return counts


def rand_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    return SimpleGraph.from_edges(
        n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    )


@pytest.fixture
def rng():
    return random.Random(1234)


ACCEPTANCE_LINES: list[str] = []


def pytest_runtest_makereport(item, call):
    crit = item.get_closest_marker("criterion")
    if crit is None or call.when != "call":
        return
    status = "PASS" if call.excinfo is None else "FAIL"
    ACCEPTANCE_LINES.append(f"[{status}] criterion {crit.args[0]:>2}: {crit.args[1]}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
