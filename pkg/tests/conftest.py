import sys

import numpy as np
import pytest

from bitpath import Graph
from bitpath.edgelist import random_digraph

# The worked 5-vertex example, 0-based. Incoming rows are derived by
# transposition, never listed by hand.
G0_EDGES_ONE_BASED = [(1, 2), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5), (5, 1)]


@pytest.fixture
def g0():
    return Graph(5, [(u - 1, v - 1) for u, v in G0_EDGES_ONE_BASED])


@pytest.fixture
def triangle():
    # a=0, b=1, c=2: a->b costs 5, a->c->b costs 2
    return Graph(3, [(0, 1), (0, 2), (2, 1)], [5, 1, 1])


def random_graphs(count, max_v, seed, densities=(0.02, 0.1, 0.3), min_v=1, max_weight=None,
                  self_loops=False):
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = int(rng.integers(min_v, max_v + 1))
        p = densities[i % len(densities)]
        yield random_digraph(n, p, rng, max_weight=max_weight, self_loops=self_loops), rng


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
