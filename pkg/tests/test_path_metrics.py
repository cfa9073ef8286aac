import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tokengraphs import (
    DisconnectedError,
    Graph,
    ParameterError,
    build_token_graph,
    find_automorphism_group,
    path_graph,
)
from tokengraphs.path_metrics import (
    all_pairs_bfs,
    all_pairs_formula,
    bfs_distance,
    distance_mismatches,
    sorted_tuple,
    token_path_distance,
)


def rank(tg, labels):
    return tg.rank_of(v - 1 for v in labels)


def test_examples():
    assert token_path_distance((1, 2, 3), (5, 6, 7)) == 12
    assert token_path_distance((2, 4), (2, 4)) == 0
    assert token_path_distance((2, 1), (6, 5)) == 8  # order of input is irrelevant
    tg = build_token_graph(path_graph(7), 3)
    assert bfs_distance(tg, rank(tg, (1, 2, 3)), rank(tg, (5, 6, 7))) == 12
    tg = build_token_graph(path_graph(6), 2)
    assert bfs_distance(tg, rank(tg, (1, 2)), rank(tg, (5, 6))) == 8


@pytest.mark.parametrize("n,k", [(n, k) for n in range(3, 11) for k in range(1, n)])
def test_moving_one_token_to_the_end(n, k):
    u = tuple(range(1, k + 1))
    v = tuple(range(1, k)) + (n,)
    assert token_path_distance(u, v) == n - k
    tg = build_token_graph(path_graph(n), k)
    assert bfs_distance(tg, rank(tg, u), rank(tg, v)) == n - k


def test_bfs_trivial_cases():
    tg = build_token_graph(path_graph(5), 2)
    assert bfs_distance(tg, 3, 3) == 0
    u = 0
    for w in tg.graph.neighbors[u]:
        assert bfs_distance(tg, u, w) == 1


def test_disconnected():
    from tokengraphs.tokens import build_token_graph as btg
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    tg = btg(g, 1)
    with pytest.raises(DisconnectedError):
        bfs_distance(tg, 0, 3)
    with pytest.raises(DisconnectedError):
        all_pairs_bfs(tg)


@pytest.mark.parametrize("bad", [((1, 1), (2, 3)), ((0, 1), (2, 3)), ((1, 2), (1, 2, 3))])
def test_input_errors(bad):
    with pytest.raises(ParameterError):
        token_path_distance(*bad)


def test_label_range():
    with pytest.raises(ParameterError):
        sorted_tuple((1, 9), n=8)


def test_all_pairs_small():
    tg = build_token_graph(path_graph(6), 2)
    assert distance_mismatches(tg) == 0
    assert all_pairs_formula(tg).max() == 8


@pytest.mark.parametrize("n", range(2, 13))
def test_all_pairs_medium(n):
    for k in range(1, n):
        if comb(n, k) <= 1000:
            assert distance_mismatches(build_token_graph(path_graph(n), k)) == 0


@given(st.integers(2, 12), st.data())
def test_metric_axioms(n, data):
    k = data.draw(st.integers(1, n - 1))
    sub = st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True)
    a, b, c = data.draw(sub), data.draw(sub), data.draw(sub)
    d = token_path_distance
    assert d(a, b) == d(b, a)
    assert d(a, c) <= d(a, b) + d(b, c)
    assert (d(a, b) == 0) == (sorted(a) == sorted(b))


@pytest.mark.parametrize("n,k", [(6, 2), (6, 3), (7, 3), (8, 4), (9, 2)])
def test_automorphisms_are_isometries(n, k):
    tg = build_token_graph(path_graph(n), k)
    dist = all_pairs_bfs(tg)
    rng = random.Random(n * 10 + k)
    for g in find_automorphism_group(tg.graph).generators:
        for _ in range(200):
            a, b = rng.randrange(tg.order), rng.randrange(tg.order)
            assert dist[a, b] == dist[g(a), g(b)]
