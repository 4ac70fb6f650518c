"""Explicit adjacency and breadth-first search ground truth."""
import pytest

from circulant import (
    CirculantParams,
    VertexOutOfRangeError,
    bfs_distances,
    build_adjacency,
    oracle_diameter,
)

P10 = CirculantParams(10, 4)


def test_neighbors_of_zero():
    assert build_adjacency(P10).neighbors(0) == [1, 4, 6, 9]


def test_four_regular():
    for n, s in [(10, 4), (5, 2), (13, 6), (30, 7)]:
        g = build_adjacency(CirculantParams(n, s))
        assert all(len(set(g.neighbors(v))) == 4 for v in range(n))


def test_neighbors_translate():
    g = build_adjacency(P10)
    base = g.neighbors(0)
    for i in range(10):
        assert g.neighbors(i) == sorted((v + i) % 10 for v in base)


def test_adjacency_is_symmetric():
    g = build_adjacency(CirculantParams(17, 6))
    for v in range(17):
        for w in g.neighbors(v):
            assert v in g.neighbors(w)


def test_bfs_chord_neighbor():
    assert bfs_distances(build_adjacency(P10), 0)[6] == 1


def test_bfs_source_is_zero():
    dist = bfs_distances(build_adjacency(P10), 3)
    assert dist[3] == 0
    assert all(d >= 0 for d in dist)


def test_bfs_two_step_reach():
    # two steps of {+-1, +-5} already cover all of Z_13
    dist = bfs_distances(build_adjacency(CirculantParams(13, 5)), 0)
    assert max(dist) == 2


def test_bfs_rejects_bad_source():
    with pytest.raises(VertexOutOfRangeError):
        bfs_distances(build_adjacency(P10), 10)


def test_bfs_ring_symmetry():
    for n, s in [(10, 4), (21, 8), (48, 13)]:
        dist = bfs_distances(build_adjacency(CirculantParams(n, s)), 0)
        for i in range(1, n):
            assert dist[i] == dist[n - i]


def test_diameter_values():
    assert oracle_diameter(CirculantParams(12, 3)).value == 3
    assert oracle_diameter(CirculantParams(14, 5)).value == 3
    assert oracle_diameter(CirculantParams(5, 2)).value == 1


def test_diameter_result_shape():
    res = oracle_diameter(P10)
    assert res.method == "oracle"
    assert res.witnesses == (2, 3, 5)


def test_all_sources_agree_on_small_graphs():
    for n, s in [(10, 4), (13, 5), (20, 7), (31, 9)]:
        single = oracle_diameter(CirculantParams(n, s))
        checked = oracle_diameter(CirculantParams(n, s), all_sources=True)
        assert single == checked
