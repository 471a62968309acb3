from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from ndeg.graphcore import Graph, GraphBuilder, Mode, disjoint_union, is_connected, verify
from ndeg.maxndeg import ListKind, VertexList, add_layer
from ndeg.maxndeg_open import (_d_plus1_into, build_connected_open, build_d_dbar, build_d_plus1,
                               build_dplus1_2k, build_general_open, build_uniform_open,
                               check_connected_open, check_general_open, find_open_split)
from ndeg.oracle import oracle_all_profiles, oracle_witnesses
from ndeg.profile import Profile, parse_profile as P

from conftest import all_positive_profiles


@pytest.mark.parametrize("d,k", [(2, 4), (3, 5), (4, 9), (2, 10)])
def test_uniform_open(d, k):
    r = build_uniform_open(d, k)
    assert verify(r.graph, Profile(((d, k),)), Mode.MAX_OPEN, True)
    S = r.marks["S"]
    assert sum(r.graph.degree(v) == 1 for v in S) >= 2
    assert all(r.graph.degree(v) <= 2 for v in S)


def test_uniform_open_error():
    with pytest.raises(ValueError):
        build_uniform_open(3, 4)


@pytest.mark.parametrize("d,dbar", [(4, 2), (3, 2), (7, 5)])
def test_d_dbar(d, dbar):
    r = build_d_dbar(d, dbar)
    g = r.graph
    assert g.n == d + 1
    assert verify(g, Profile(((d, d), (dbar, 1))), Mode.MAX_OPEN, True)
    b = GraphBuilder(g.n)
    for u, v in g.edges():
        b.add_edge(u, v)
    L = VertexList(r.marks["L"])
    assert len(L) == d - 1 and L.holds_in(b)


def test_d_dbar_error():
    with pytest.raises(ValueError):
        build_d_dbar(3, 3)


@pytest.mark.parametrize("d", [2, 3, 4, 6])
def test_d_plus1(d):
    r = build_d_plus1(d)
    assert r.graph.n == d + 1
    assert verify(r.graph, Profile(((d, d + 1),)), Mode.MAX_OPEN, True)
    assert all(r.graph.degree(v) == 2 for v in r.marks["L"])
    assert len(r.marks["L"]) == d - 1


def test_d_plus1_triangle_and_error():
    assert build_d_plus1(2).graph.m == 3
    with pytest.raises(ValueError):
        build_d_plus1(1)


@pytest.mark.parametrize("d,k", [(3, 2), (4, 3), (3, 6)])
def test_dplus1_2k(d, k):
    r = build_dplus1_2k(d, k)
    assert r.graph.n == d + k + 1
    assert verify(r.graph, Profile(((d, d + 1), (2, k))), Mode.MAX_OPEN, True)


def test_dplus1_2k_error():
    with pytest.raises(ValueError):
        build_dplus1_2k(3, 1)


def test_connected_check_examples():
    assert check_connected_open(P("3^3 2^2"))
    assert not check_connected_open(P("3^4 2^1"))
    assert check_connected_open(P("4^4 1^1"))
    assert check_connected_open(P("1^2"))
    assert not check_connected_open(P("2^3 0^1"))


@pytest.mark.parametrize("text", ["3^3 2^2", "1^2", "3^4 2^2", "4^4 1^1", "5^5 4^3 3^2", "4^5 3^3 2^1"])
def test_build_connected(text):
    p = P(text)
    assert verify(build_connected_open(p).graph, p, Mode.MAX_OPEN, True)


def test_general_check_examples():
    assert check_general_open(P("3^6 2^2 1^1"))
    assert not check_general_open(P("3^3"))
    assert check_general_open(P("1^4"))
    assert not check_general_open(P("3^4 2^1"))


def test_general_split_choice():
    # stars are scanned by descending degree, so the 3-star is found first
    rest, part = find_open_split(P("3^6 2^2 1^1"))
    assert rest == P("3^3 2^2") and part == P("3^3 1^1")
    assert check_connected_open(P("3^6"))


def test_general_other_split_also_verifies():
    cherry = Graph(3, [(0, 1), (0, 2)])
    g = disjoint_union([build_connected_open(P("3^6")).graph, cherry])
    assert verify(g, P("3^6 2^2 1^1"), Mode.MAX_OPEN)


@pytest.mark.parametrize("text", ["1^4", "3^6 2^2 1^1", "4^5 3^3 1^5", "2^4 1^2"])
def test_build_general(text):
    p = P(text)
    assert verify(build_general_open(p).graph, p, Mode.MAX_OPEN)


def test_build_general_shapes():
    g = build_general_open(P("1^4")).graph
    assert g.m == 2 and not is_connected(g)
    with pytest.raises(ValueError):
        build_general_open(P("3^4 2^1"))


def test_impossibility_small():
    assert P("3^4 2^1") not in oracle_all_profiles(5, Mode.MAX_OPEN)
    assert P("4^5 2^1") not in oracle_all_profiles(6, Mode.MAX_OPEN)
    for d in (2, 3, 4):
        ws = oracle_witnesses(Profile(((d, d + 1),)), Mode.MAX_OPEN)
        assert ws and all(min(g.degrees) >= 2 for g in ws)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_checks_against_oracle(n):
    conn = oracle_all_profiles(n, Mode.MAX_OPEN, True)
    gen = oracle_all_profiles(n, Mode.MAX_OPEN, False)
    for p in all_positive_profiles(n):
        assert check_connected_open(p) == (p in conn), p
        assert check_general_open(p) == (p in gen), p


@pytest.mark.slow
def test_checks_against_oracle_seven():
    conn = oracle_all_profiles(7, Mode.MAX_OPEN, True)
    gen = oracle_all_profiles(7, Mode.MAX_OPEN, False)
    for p in all_positive_profiles(7):
        assert check_connected_open(p) == (p in conn), p
        assert check_general_open(p) == (p in gen), p


@settings(max_examples=200)
@given(st.integers(3, 12), st.integers(2, 11), st.integers(1, 30))
def test_pseudo_valid_inheritance(d0, d, k):
    d = min(d, d0 - 1)
    if d < 3:
        d = 3 if d0 > 3 else None
    if d is None:
        return
    b = GraphBuilder()
    L = _d_plus1_into(b, d0)
    assert L.kind is ListKind.PSEUDO_VALID
    out = add_layer(b, L.prefix(d - 1), k, d)
    assert out.kind is ListKind.VALID and out.holds_in(b)


@st.composite
def connected_open_profiles(draw):
    ell = draw(st.integers(1, 5))
    degs = sorted(draw(st.lists(st.integers(2, 20), min_size=ell, max_size=ell, unique=True)), reverse=True)
    top = draw(st.integers(degs[0], 3 * degs[0] + 3))
    rest = [draw(st.integers(1, 2 * d + 3)) for d in degs[1:]]
    return Profile(tuple(zip(degs, [top] + rest)))


@settings(max_examples=300)
@given(connected_open_profiles())
def test_build_connected_sound(p):
    if check_connected_open(p):
        assert verify(build_connected_open(p).graph, p, Mode.MAX_OPEN, True)
    else:
        d, n = p.blocks[0]
        excluded = p.ell == 2 and p.blocks[1] == (2, 1) and n == d + 1
        assert excluded or d > p.n - 1


@settings(max_examples=300)
@given(connected_open_profiles(), st.integers(0, 6), st.booleans())
def test_build_general_sound(p, ones, star):
    extra = {1: ones}
    if star:
        extra[p.degrees[0]] = extra.get(p.degrees[0], 0)
    q = p + Profile.from_counts(extra)
    if check_general_open(q):
        assert verify(build_general_open(q).graph, q, Mode.MAX_OPEN)
