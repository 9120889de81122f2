import pytest

from bitpath import Graph
from bitpath.oracle import (
    OracleOverflow,
    bfs_distance,
    brute_force_shortest_paths,
    brute_force_walks,
    dijkstra_distance,
    walk_endpoint_table,
    walk_endpoints,
)

from conftest import random_graphs


def test_bfs_example(g0):
    assert bfs_distance(g0, 1, 4) == 2
    assert bfs_distance(g0, 3, 3) == 0
    assert bfs_distance(Graph(3, [(0, 1)]), 1, 0) is None


def test_dijkstra_triangle(triangle):
    assert dijkstra_distance(triangle, 0, 1) == 2
    assert dijkstra_distance(triangle, 1, 0) is None
    with pytest.raises(ValueError):
        dijkstra_distance(Graph(2, [(0, 1)]), 0, 1)


def test_brute_force_walks_two_cycle():
    g = Graph(2, [(0, 1), (1, 0)])
    assert brute_force_walks(g, 0, 0, 4) == [(0, 1, 0, 1, 0)]
    assert brute_force_walks(g, 0, 0, 3) == []
    assert brute_force_walks(g, 0, 1, 1) == [(0, 1)]


def test_brute_force_shortest_example(g0):
    assert brute_force_shortest_paths(g0, 1, 4) == [(1, 3, 4)]


def test_brute_force_lexicographic():
    g = Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert brute_force_walks(g, 0, 3, 2) == [(0, 1, 3), (0, 2, 3)]


def test_overflow_is_loud():
    # complete digraph with loops: 4**3 walks of 4 hops from 0 to 0
    n = 4
    g = Graph(n, [(u, v) for u in range(n) for v in range(n)])
    assert len(brute_force_walks(g, 0, 0, 4)) == n**3
    with pytest.raises(OracleOverflow):
        brute_force_walks(g, 0, 0, 4, cap=10)


def test_unit_dijkstra_is_bfs():
    for g, rng in random_graphs(60, 20, seed=21, min_v=2):
        gw = Graph(g.order, g.edges(), [1] * g.edge_count)
        a, b = (int(x) for x in rng.integers(0, g.order, size=2))
        assert dijkstra_distance(gw, a, b) == bfs_distance(g, a, b)


def test_walk_endpoints_table_agree():
    for g, _ in random_graphs(20, 10, seed=22, self_loops=True):
        table = walk_endpoint_table(g, 5)
        for v in range(g.order):
            for k in range(6):
                assert table[k][v] == walk_endpoints(g, v, k)


def test_bad_vertex():
    with pytest.raises(IndexError):
        bfs_distance(Graph(2, []), 0, 2)
