import numpy as np
import pytest
from hypothesis import strategies as st

from graph_translation import Graph, generate


def random_signals(rng, n, m):
    return rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))


@st.composite
def connected_graphs(draw, min_n=2, max_n=12, weighted=True):
    """Random tree plus extra edges; weights in [0.1, 5] when ``weighted``."""
    n = draw(st.integers(min_n, max_n))
    edges = {}
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges[(u, v)] = None
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
        for e in extra:
            edges[e] = None
    out = []
    for u, v in edges:
        w = draw(st.floats(0.1, 5.0)) if weighted else 1.0
        out.append((u, v, w))
    return Graph.from_edges(n, out)


def zoo():
    """Small deterministic and seeded random test graphs."""
    return {
        "K2": generate("path", 2),
        "P9": generate("path", 9),
        "C7": generate("cycle", 7),
        "K5": generate("complete", 5),
        "star6": generate("star", 6),
        "grid3x4": generate("grid", rows=3, cols=4),
        "er20": generate("erdos_renyi", 20, p=0.25, seed=1),
        "geo25": generate("geometric", 25, radius=0.4, seed=2),
        "er15w": generate("erdos_renyi", 15, p=0.3, seed=5, weight_range=(0.5, 2.0)),
    }


@pytest.fixture(scope="session")
def graph_zoo():
    return zoo()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
