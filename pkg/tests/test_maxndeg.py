from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from ndeg.graphcore import GraphBuilder, Mode, is_connected, ndeg_values, profile_of, verify
from ndeg.maxndeg import (ListKind, VertexList, add_layer, build_caterpillar, build_connected_closed,
                          build_general_closed, caterpillar_graph, caterpillar_into, check_connected_closed,
                          check_general_closed)
from ndeg.oracle import oracle_all_profiles
from ndeg.profile import Profile, parse_profile as P

from conftest import all_positive_profiles


def test_connected_check_examples():
    assert check_connected_closed(P("3^4 2^1"))
    assert check_connected_closed(P("1^2"))
    assert not check_connected_closed(P("3^3"))


def test_general_check_examples():
    assert check_general_closed(P("1^4"))
    assert not check_general_closed(P("2^2 1^1"))
    assert check_general_closed(P("3^4 1^2"))
    assert not check_general_closed(P("2^3 1^1"))


@pytest.mark.parametrize("d,k", [(5, 12), (1, 2), (3, 4), (2, 3), (2, 7), (4, 9), (6, 7)])
def test_caterpillar(d, k):
    r, S = build_caterpillar(d, k)
    g = r.graph
    assert g.n == k and is_connected(g)
    assert verify(g, Profile(((d, k),)), Mode.MAX_CLOSED)
    assert len(S) == d
    assert all(not g.has_edge(u, v) for u in S for v in S)
    assert all(g.degree(v) <= 2 for v in S)
    if d >= 2:
        assert sum(g.degree(v) == 1 for v in S) >= 2


def test_caterpillar_merge_count():
    # d=5, k=12: spine of alpha=3 inner vertices, two hairs shared
    r, _ = build_caterpillar(5, 12)
    assert r.graph.m == 12 - 1 + 2


@pytest.mark.parametrize("d,k", [(1, 2), (2, 3), (3, 7), (5, 12), (6, 40)])
def test_caterpillar_fast_path_matches(d, k):
    b = GraphBuilder()
    cat = caterpillar_into(b, d, k)
    g, S = caterpillar_graph(d, k)
    assert sorted(g.edges()) == sorted(b.freeze().edges())
    assert list(S) == list(cat.independent)


def test_caterpillar_error():
    with pytest.raises(ValueError):
        build_caterpillar(3, 3)


def _star3():
    b = GraphBuilder(4)
    for x in (1, 2, 3):
        b.add_edge(0, x)
    return b


def test_add_layer_small():
    b = _star3()
    out = add_layer(b, VertexList([1, 2]), 1, 3)
    g = b.freeze()
    assert g.n == 5
    assert ndeg_values(g, Mode.MAX_CLOSED)[4] == 3
    assert len(out) == 1 and out.holds_in(b)
    assert is_connected(g)


def test_add_layer_big_branch():
    b = GraphBuilder()
    cat = caterpillar_into(b, 4, 8)
    old = b.n
    L = VertexList(cat.independent[:2])
    out = add_layer(b, L, 5, 3)
    g = b.freeze()
    vals = ndeg_values(g, Mode.MAX_CLOSED)
    assert g.n == old + 5 and all(vals[old:] == 3)
    assert all(vals[:old] == 4)
    assert len(out) == 1 and out.holds_in(b)


def test_add_layer_errors():
    b = _star3()
    with pytest.raises(ValueError):
        add_layer(b, VertexList([1]), 1, 3)
    with pytest.raises(ValueError):
        add_layer(b, VertexList([0, 1]), 1, 3)     # 0 has degree 3 > 1
    with pytest.raises(ValueError):
        add_layer(b, VertexList([1], ListKind.PSEUDO_VALID), 1, 2)


@pytest.mark.parametrize("text", ["3^4 2^1", "1^2", "4^5 3^2 2^1", "2^3", "5^9 4^1 3^7 2^2"])
def test_build_connected(text):
    p = P(text)
    r = build_connected_closed(p)
    assert verify(r.graph, p, Mode.MAX_CLOSED, True)


def test_build_connected_with_isolated():
    p = P("3^4 2^1 0^3")
    assert verify(build_connected_closed(p).graph, p, Mode.MAX_CLOSED, True)


@pytest.mark.parametrize("text", ["1^4", "3^4 1^2", "2^3 1^2", "4^5 2^3 1^4 0^1"])
def test_build_general(text):
    p = P(text)
    assert verify(build_general_closed(p).graph, p, Mode.MAX_CLOSED)


def test_build_errors():
    with pytest.raises(ValueError):
        build_general_closed(P("2^2 1^2"))
    with pytest.raises(ValueError):
        build_connected_closed(P("3^3"))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_checks_against_oracle(n):
    conn = oracle_all_profiles(n, Mode.MAX_CLOSED, True)
    gen = oracle_all_profiles(n, Mode.MAX_CLOSED, False)
    for p in all_positive_profiles(n):
        assert check_connected_closed(p) == (p in conn), p
        assert check_general_closed(p) == (p in gen), p
        if p in gen:
            d_top, n_top = p.blocks[0]
            assert n_top >= d_top + 1


@pytest.mark.slow
def test_checks_against_oracle_seven():
    conn = oracle_all_profiles(7, Mode.MAX_CLOSED, True)
    gen = oracle_all_profiles(7, Mode.MAX_CLOSED, False)
    for p in all_positive_profiles(7):
        assert check_connected_closed(p) == (p in conn), p
        assert check_general_closed(p) == (p in gen), p


@st.composite
def connected_closed_profiles(draw):
    ell = draw(st.integers(1, 5))
    degs = sorted(draw(st.lists(st.integers(2, 25), min_size=ell, max_size=ell, unique=True)), reverse=True)
    top = draw(st.integers(degs[0] + 1, 3 * degs[0] + 4))
    rest = [draw(st.integers(1, 2 * d + 3)) for d in degs[1:]]
    return Profile(tuple(zip(degs, [top] + rest)))


@settings(max_examples=300)
@given(connected_closed_profiles())
def test_layers_keep_prefix_invariant(p):
    r = build_connected_closed(p)
    g = r.graph
    assert verify(g, p, Mode.MAX_CLOSED, True)
    # after every layer the graph grown so far realizes the blocks added so far
    ranges = r.marks["layers"]
    for i in range(1, len(ranges) + 1):
        h, _ = g.induced(range(0, ranges[i - 1][1]))
        assert profile_of(h, Mode.MAX_CLOSED) == Profile(p.blocks[:i])
        assert is_connected(h)


@settings(max_examples=300)
@given(st.integers(2, 12), st.data())
def test_inheritance(d0, data):
    """Random layer schedules: every returned list is valid in the host graph."""
    b = GraphBuilder()
    k0 = data.draw(st.integers(d0 + 1, 3 * d0))
    L = VertexList(caterpillar_into(b, d0, k0).independent)
    d = d0
    while d > 2:
        d = data.draw(st.integers(2, d - 1))
        k = data.draw(st.integers(1, 2 * d + 2))
        L = add_layer(b, L.prefix(d - 1), k, d)
        assert len(L) == d - 2
        assert L.kind is ListKind.VALID and L.holds_in(b)


@given(connected_closed_profiles())
def test_edge_count_linear(p):
    g = build_connected_closed(p).graph
    assert g.m <= 4 * sum(c + d for d, c in p.blocks)
