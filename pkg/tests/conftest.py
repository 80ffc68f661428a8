import random

import pytest
from hypothesis import strategies as st

from opskit.graph import WeightedGraph
from opskit.io import fixture_text, parse_graph_file, parse_rank_csv

FIG1_EDGES = [
    (1, 2, 5), (1, 4, 2), (1, 6, 9),
    (2, 3, 4), (2, 4, 3), (2, 5, 6),
    (3, 5, 7), (3, 8, 8),
    (4, 5, 1), (4, 6, 1), (4, 7, 5),
    (5, 7, 7), (5, 8, 8),
    (6, 7, 2),
    (7, 8, 3),
]


@pytest.fixture
def fig1() -> WeightedGraph:
    return parse_graph_file(fixture_text("fig1.graph"))


@pytest.fixture
def table1():
    return parse_rank_csv(fixture_text("table1.csv"))


def random_connected_graph(rng: random.Random, n: int, extra: int, wmax: int = 9) -> WeightedGraph:
    """Random spanning tree plus up to ``extra`` more edges, integer weights 1..wmax."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    pairs = set()
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        pairs.add((min(a, b), max(a, b)))
    candidates = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if (u, v) not in pairs]
    rng.shuffle(candidates)
    pairs.update(candidates[:extra])
    return WeightedGraph(n, [(u, v, rng.randint(1, wmax)) for u, v in sorted(pairs)])


@st.composite
def connected_graphs(draw, max_n: int = 9, max_extra: int = 8, wmax: int = 9):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    extra = draw(st.integers(0, max_extra))
    return random_connected_graph(random.Random(seed), n, extra, wmax)


@st.composite
def graphs(draw, max_n: int = 7, wmax: int = 9):
    """Arbitrary (possibly disconnected) simple graphs."""
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    weights = draw(st.lists(st.integers(0, wmax), min_size=len(chosen), max_size=len(chosen)))
    return WeightedGraph(n, [(u, v, w) for (u, v), w in zip(chosen, weights)])


_acceptance: dict[str, list] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        crit = name.split("_")[2]
        _acceptance.setdefault(crit, []).append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_acceptance, key=int):
        results = _acceptance[crit]
        ok = all(outcome == "passed" for _, outcome in results)
        label = results[0][0].split("[")[0]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {crit}: {label} ({len(results)} case(s))")
