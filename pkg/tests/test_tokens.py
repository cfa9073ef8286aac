from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tokengraphs import (
    CapacityError,
    ContractViolation,
    Graph,
    ParameterError,
    build_token_graph,
    colex_rank,
    colex_unrank,
    complement_relabel,
    complete_graph,
    cycle_graph,
    delete_and_project,
    path_graph,
    star_graph,
    wheel_graph,
)
from tokengraphs.tokens import format_subset, k_subset_masks, mask_of, token_degree_by_cut

from conftest import graphs


def naive_token_graph(g, k):
    """Straight from the definition: subsets adjacent iff their symmetric
    difference is an edge.  Vertices ordered by colex rank."""
    subsets = sorted((frozenset(c) for c in combinations(range(g.n), k)),
                     key=lambda s: sorted(s, reverse=True))
    index = {s: i for i, s in enumerate(subsets)}
    edges = []
    for a, b in combinations(subsets, 2):
        d = a ^ b
        if len(d) == 2:
            x, y = sorted(d)
            if g.has_edge(x, y):
                edges.append((index[a], index[b]))
    return Graph.from_edges(len(subsets), edges)


@given(graphs(min_n=2, max_n=7), st.data())
@settings(max_examples=80)
def test_construction_matches_definition(g, data):
    k = data.draw(st.integers(1, g.n - 1))
    assert build_token_graph(g, k).graph == naive_token_graph(g, k)


def test_colex_order_small():
    masks = k_subset_masks(4, 2)
    assert [format_subset(m) for m in masks] == ["{1,2}", "{1,3}", "{2,3}", "{1,4}", "{2,4}", "{3,4}"]
    assert [colex_rank(m) for m in masks] == list(range(6))


@given(st.integers(1, 20), st.data())
def test_rank_unrank_roundtrip(n, data):
    k = data.draw(st.integers(0, n))
    r = data.draw(st.integers(0, comb(n, k) - 1))
    m = colex_unrank(r, n, k)
    assert m.bit_count() == k and m < 1 << n
    assert colex_rank(m) == r


def test_unrank_out_of_range():
    with pytest.raises(ParameterError):
        colex_unrank(6, 4, 2)


def test_known_token_graphs():
    assert build_token_graph(cycle_graph(7), 2).order == 21
    # F_1(G) is G itself
    assert build_token_graph(wheel_graph(5), 1).graph == wheel_graph(5)
    # F_2(K_4) is the octahedron: 6 vertices, 4-regular
    oct_ = build_token_graph(complete_graph(4), 2).graph
    assert oct_.n == 6 and set(oct_.degrees()) == {4}
    # F_2(P_6) degree histogram by direct count
    assert build_token_graph(path_graph(6), 2).graph.degree_histogram() == {1: 2, 2: 4, 3: 6, 4: 3}


def test_k_bounds():
    for k in (0, 5, -1):
        with pytest.raises(ParameterError):
            build_token_graph(path_graph(5), k)


def test_capacity(monkeypatch):
    monkeypatch.setenv("TOKENGRAPHS_MAX_ORDER", "20")
    with pytest.raises(CapacityError):
        build_token_graph(cycle_graph(7), 2)
    assert build_token_graph(cycle_graph(6), 2).order == 15
    monkeypatch.setenv("TOKENGRAPHS_MAX_ORDER", "abc")
    with pytest.raises(ParameterError):
        build_token_graph(cycle_graph(6), 2)
    monkeypatch.delenv("TOKENGRAPHS_MAX_ORDER")
    with pytest.raises(CapacityError):
        build_token_graph(path_graph(65), 1)


def test_labels_and_ranks():
    tg = build_token_graph(star_graph(5), 2)
    r = tg.rank_of([0, 3])
    assert tg.label(r) == "{1,4}"
    assert tg.subset(r) == (0, 3)
    with pytest.raises(ParameterError):
        tg.rank(mask_of([0, 1, 2]))


@given(graphs(min_n=2, max_n=7), st.data())
@settings(max_examples=60)
def test_degree_is_cut_size(g, data):
    k = data.draw(st.integers(1, g.n - 1))
    tg = build_token_graph(g, k)
    for r in range(tg.order):
        assert token_degree_by_cut(tg, r) == tg.graph.degree(r)


def test_cut_contract_violation():
    tg = build_token_graph(path_graph(4), 2)
    from tokengraphs.tokens import TokenGraph
    broken = TokenGraph(tg.base, 2, build_token_graph(cycle_graph(4), 2).graph, tg.masks)
    with pytest.raises(ContractViolation):
        for r in range(broken.order):
            token_degree_by_cut(broken, r)


@given(graphs(min_n=2, max_n=7), st.data())
@settings(max_examples=60)
def test_complement_is_isomorphism(g, data):
    k = data.draw(st.integers(1, g.n - 1))
    cm = complement_relabel(build_token_graph(g, k))
    assert cm.target.k == g.n - k
    assert sorted(cm.forward) == list(range(cm.target.order))
    assert all(cm.backward[cm.forward[r]] == r for r in range(len(cm.forward)))


@given(graphs(min_n=3, max_n=7), st.data())
@settings(max_examples=60)
def test_deletion_projection(g, data):
    k = data.draw(st.integers(1, g.n - 1))
    xs = data.draw(st.lists(st.integers(0, g.n - 1), unique=True, max_size=g.n - k))
    rep = delete_and_project(build_token_graph(g, k), xs)
    assert rep.isomorphic
    assert rep.direct.order == comb(g.n - len(xs), k)


def test_deletion_errors():
    tg = build_token_graph(path_graph(5), 3)
    with pytest.raises(ParameterError):
        delete_and_project(tg, [0, 1, 2])
    with pytest.raises(ParameterError):
        delete_and_project(tg, [7])
