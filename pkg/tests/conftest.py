import random

import pytest
from hypothesis import settings, strategies as st

from dmramsey import graph as G
from dmramsey.coloring import EdgeColoring, num_slots

settings.register_profile("default", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("default")

SEED = 20160801


@pytest.fixture
def rng():
    return random.Random(SEED)


@st.composite
def graphs(draw, max_n=10, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return G.build_graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def colorings(draw, max_n=7, k=None, min_n=1):
    n = draw(st.integers(min_n, max_n))
    kk = k if k is not None else draw(st.integers(1, 3))
    cols = draw(st.lists(st.integers(0, kk - 1), min_size=num_slots(n), max_size=num_slots(n)))
    return EdgeColoring(n, kk, tuple(cols))


def random_graph(rng, n, p):
    return G.build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


# acceptance criteria record one line each; printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
