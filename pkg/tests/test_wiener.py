import itertools
from math import comb

import pytest

from oracles import bfs_from, floyd_warshall
from zdg.wiener import (
    DisconnectedGraphError,
    WienerRow,
    all_pairs_distances,
    verify_wiener,
    wiener_as_printed,
    wiener_closed_form,
    wiener_index,
)
from zdg.zdgraph import (
    COMPRESSED,
    ZdGraph,
    build_compressed_graph,
    build_compressed_prime_power,
    build_full_graph,
)


def test_distances_n6():
    d = all_pairs_distances(build_compressed_prime_power(6))
    assert d(1, 5) == 1
    assert d(1, 2) == d(1, 3) == d(1, 4) == 2


def test_distances_single_vertex():
    d = all_pairs_distances(build_compressed_prime_power(2))
    assert d.dist == ((0,),)


def test_distances_m12_compressed():
    d = all_pairs_distances(build_compressed_graph(12))
    assert d(2, 3) == 3
    assert d(2, 6) == 1 and d(6, 4) == 1 and d(4, 3) == 1


@pytest.mark.parametrize("g", [build_full_graph(m) for m in (12, 30, 36, 64, 100)]
                         + [build_compressed_graph(m) for m in (60, 360, 720)])
def test_distances_match_floyd_warshall(g):
    table = all_pairs_distances(g)
    ref = floyd_warshall(g.vertices, g.edges)
    assert [[x for x in r] for r in table.dist] == ref


@pytest.mark.parametrize("m", [30, 72, 210])
def test_distance_table_invariants(m):
    g = build_full_graph(m)
    t = all_pairs_distances(g)
    edges = set(g.edges)
    n = t.order
    for i in range(n):
        assert t.dist[i][i] == 0
        for j in range(n):
            assert t.dist[i][j] == t.dist[j][i]
            u, v = sorted((g.vertices[i], g.vertices[j]))
            assert (t.dist[i][j] == 1) == ((u, v) in edges)
    for i, j, k in itertools.product(range(n), repeat=3):
        assert t.dist[i][j] <= t.dist[i][k] + t.dist[k][j]


def test_loops_do_not_shorten_paths():
    g = build_compressed_prime_power(5)
    g_no_loops = ZdGraph(g.kind, g.param, g.vertices, g.edges, ())
    assert all_pairs_distances(g).dist == all_pairs_distances(g_no_loops).dist


@pytest.mark.parametrize("n, expected", [(6, 14), (7, 21), (2, 0), (3, 1), (10, 52)])
def test_wiener_index_values(n, expected):
    assert wiener_index(build_compressed_prime_power(n)) == expected
    assert wiener_closed_form(n) == expected


@pytest.mark.parametrize("n", range(3, 201))
def test_distance_law(n):
    d = all_pairs_distances(build_compressed_prime_power(n))
    for i in range(1, n):
        for j in range(1, n):
            if i != j:
                assert d.dist[i - 1][j - 1] == (1 if i + j >= n else 2)


@pytest.mark.parametrize("n", list(range(2, 60)) + [97, 128, 255, 500])
def test_wiener_three_ways(n):
    g = build_compressed_prime_power(n)
    assert wiener_index(g) == 2 * comb(n - 1, 2) - len(g.edges) == wiener_closed_form(n)


@pytest.mark.parametrize("n", range(2, 25))
def test_wiener_vs_plain_bfs(n):
    g = build_compressed_prime_power(n)
    total = sum(d for s in g.vertices for d in bfs_from(g.vertices, g.edges, s).values())
    assert wiener_index(g) == total // 2


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17])
def test_wiener_complete_graph(p):
    assert wiener_index(build_full_graph(p * p)) == comb(p - 1, 2)


def test_wiener_general_modulus_matches_floyd():
    for m in (12, 18, 30, 60, 100):
        g = build_full_graph(m)
        ref = floyd_warshall(g.vertices, g.edges)
        assert wiener_index(g) == sum(map(sum, ref)) // 2


def test_wiener_empty_graph():
    assert wiener_index(build_full_graph(13)) == 0


def test_disconnected():
    g = ZdGraph(COMPRESSED, 0, (1, 2, 3), ((1, 2),), ())
    with pytest.raises(DisconnectedGraphError) as info:
        wiener_index(g)
    assert info.value.pair == (1, 3)
    assert all_pairs_distances(g).dist[0][2] is None


@pytest.mark.parametrize("n", range(2, 400))
def test_closed_form_integrality(n):
    num = (n - 2) * (3 * n - 4) if n % 2 == 0 else (n - 1) * (3 * n - 7)
    assert num % 4 == 0
    assert wiener_closed_form(n) >= 0


def test_closed_form_rejects_small_n():
    with pytest.raises(ValueError):
        wiener_closed_form(1)


def test_printed_denominator_misses_anchors():
    assert wiener_as_printed(6) == 28
    assert wiener_as_printed(7) == 42


def test_verify_wiener_small():
    rows, ok = verify_wiener(7)
    assert ok and len(rows) == 6
    assert [r.bfs for r in rows] == [0, 1, 4, 8, 14, 21]
    rows, ok = verify_wiener(2)
    assert rows == [WienerRow(2, 0, 0)] and ok
    rows, _ = verify_wiener(3)
    assert rows[-1].to_json() == {"n": 3, "bfs": 1, "closed_form": 1, "match": True}


def test_wiener_row_mismatch_is_data():
    row = WienerRow(5, 8, 9)
    assert not row.match
    assert WienerRow.from_json(row.to_json()) == row
    with pytest.raises(ValueError):
        WienerRow.from_json({"n": 5, "bfs": 8, "closed_form": 9, "match": True})
