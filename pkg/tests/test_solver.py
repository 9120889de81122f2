import pytest

from bitpath import Graph
from bitpath.oracle import bfs_distance, dijkstra_distance
from bitpath.solver import NotFittedError, ShortestPathSolver

from conftest import random_graphs


def test_params_round_trip():
    s = ShortestPathSolver(budget=10)
    assert s.get_params() == {"min_order": 1, "max_paths": 1024, "budget": 10, "flat": False}
    s.set_params(flat=True)
    assert s.flat
    with pytest.raises(ValueError):
        s.set_params(nope=1)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        ShortestPathSolver().predict([(0, 1)])


def test_fit_rejects_non_graph():
    with pytest.raises(TypeError):
        ShortestPathSolver().fit([[0, 1]])


def test_example_query(g0):
    res = ShortestPathSolver().fit(g0).query(1, 4)
    assert res.paths == [(1, 3, 4)]


@pytest.mark.parametrize("flat", [False, True])
def test_predict_matches_oracles(flat):
    for g, rng in random_graphs(20, 16, seed=31, min_v=2, max_weight=9):
        pairs = [tuple(int(x) for x in rng.integers(0, g.order, size=2)) for _ in range(5)]
        got = ShortestPathSolver(flat=flat).fit(g).predict(pairs)
        assert got == [dijkstra_distance(g, a, b) for a, b in pairs]
        gu = g.unweighted()
        got = ShortestPathSolver(flat=flat).fit(gu).predict(pairs)
        assert got == [bfs_distance(gu, a, b) for a, b in pairs]
