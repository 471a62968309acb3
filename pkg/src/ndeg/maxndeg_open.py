"""Maximum open-neighborhood-degree profiles.

The open value of ``v`` is the largest degree among its neighbours, so it
is undefined on isolated vertices.  The layering machinery of the closed
case carries over; what changes is the top block, which may start from a
caterpillar, a ``(d^{d+1})`` seed with a pseudo-valid list, or a
``(d^d, dbar^1)`` seed that borrows one vertex from the next block.
"""

from __future__ import annotations

from .graphcore import GraphBuilder, Mode, Realization
from .maxndeg import ListKind, VertexList, add_layer, caterpillar_graph, caterpillar_into
from .profile import Profile, split_candidates


def _k2() -> GraphBuilder:
    b = GraphBuilder(2)
    b.add_edge(0, 1)
    return b


def _star_into(b: GraphBuilder, d: int) -> None:
    c = b.add_vertex()
    for x in b.add_vertices(d):
        b.add_edge(c, x)


def build_uniform_open(d: int, k: int) -> Realization:
    """Caterpillar realization of ``(d^k)`` for ``k >= d+2``."""
    if d < 2 or k < d + 2:
        raise ValueError(f"uniform open build needs d >= 2 and k >= d+2 (d={d}, k={k})")
    g, S = caterpillar_graph(d, k)
    return Realization(g, Mode.MAX_OPEN, marks={"S": S})


def _d_dbar_into(b: GraphBuilder, d: int, dbar: int) -> VertexList:
    z, y = b.add_vertices(2)
    v = b.add_vertices(d - 1)
    for x in v:
        b.add_edge(z, x)
    b.add_edge(z, y)
    for x in v[:dbar - 1]:
        b.add_edge(y, x)
    return VertexList(v[::-1])


def build_d_dbar(d: int, dbar: int) -> Realization:
    """``(d^d, dbar^1)`` on ``d+1`` vertices with a valid list of size ``d-1``."""
    if not d > dbar >= 2:
        raise ValueError(f"need d > dbar >= 2 (d={d}, dbar={dbar})")
    b = GraphBuilder()
    L = _d_dbar_into(b, d, dbar)
    return Realization(b.freeze(), Mode.MAX_OPEN, marks={"L": L.vertices})


def _d_plus1_into(b: GraphBuilder, d: int) -> VertexList:
    u1, u2 = b.add_vertices(2)
    b.add_edge(u1, u2)
    w = b.add_vertices(d - 1)
    for x in w:
        b.add_edge(u1, x)
        b.add_edge(u2, x)
    return VertexList(w, ListKind.PSEUDO_VALID)


def build_d_plus1(d: int) -> Realization:
    """``(d^{d+1})`` on ``d+1`` vertices; the degree-2 vertices form a pseudo-valid list."""
    if d < 2:
        raise ValueError(f"need d >= 2 (d={d})")
    b = GraphBuilder()
    L = _d_plus1_into(b, d)
    return Realization(b.freeze(), Mode.MAX_OPEN, marks={"L": L.vertices})


def _dplus1_2k_into(b: GraphBuilder, d: int, k: int) -> None:
    u1, u2 = b.add_vertices(2)
    v = b.add_vertices(d + 1)
    for x in v[:d]:
        b.add_edge(u1, x)
    for x in v[1:]:
        b.add_edge(u2, x)
    prev = v[d]
    for a in b.add_vertices(k - 2):
        b.add_edge(prev, a)
        prev = a


def build_dplus1_2k(d: int, k: int) -> Realization:
    """``(d^{d+1}, 2^k)`` for ``d >= 3``, ``k >= 2`` on ``d+k+1`` vertices."""
    if d < 3 or k < 2:
        raise ValueError(f"need d >= 3 and k >= 2 (d={d}, k={k})")
    b = GraphBuilder()
    _dplus1_2k_into(b, d, k)
    return Realization(b.freeze(), Mode.MAX_OPEN)


def _special(p: Profile) -> str | None:
    """Name the special shape of ``p``, if it has one."""
    if p == Profile(((1, 2),)):
        return "edge"
    if p.ell == 2:
        (d, n), (e, m) = p.blocks
        if e == 1 and m == 1 and n == d and d >= 2:
            return "star"
        if e == 2 and n == d + 1 and d >= 3:
            return "dplus1_2k" if m >= 2 else "excluded"
    return None


def check_connected_open(p: Profile) -> bool:
    if p.isolated or p.ell == 0:
        return False
    kind = _special(p)
    if kind in ("edge", "star"):
        return True
    if kind == "excluded":
        return False
    d_top, n_top = p.blocks[0]
    return d_top <= min(n_top, p.n - 1) and p.degrees[0] >= 2


def explain_connected_open(p: Profile) -> list[str]:
    """Human-readable clauses behind :func:`check_connected_open`."""
    if p.isolated:
        return ["isolated demand: open value undefined on an isolated vertex"]
    kind = _special(p)
    if kind == "edge":
        return ["special case (1^2): single edge"]
    if kind == "star":
        return [f"special case (d^d,1^1) with d={p.blocks[0][0]}: star"]
    if kind == "excluded":
        return [f"excluded shape (d^{{d+1}},2^1) with d={p.blocks[0][0]}: never realizable"]
    d_top, n_top = p.blocks[0]
    return [f"d_l <= n_l: {'ok' if d_top <= n_top else 'FAIL'}",
            f"d_l <= n-1: {'ok' if d_top <= p.n - 1 else 'FAIL'}",
            f"d_1 >= 2: {'ok' if p.degrees[0] >= 2 else 'FAIL'}"]


def _grow_open(b: GraphBuilder, p: Profile) -> None:
    kind = _special(p)
    if kind == "edge":
        u, v = b.add_vertices(2)
        b.add_edge(u, v)
        return
    if kind == "star":
        _star_into(b, p.blocks[0][0])
        return
    if kind == "dplus1_2k":
        (d, _), (_, k) = p.blocks
        _dplus1_2k_into(b, d, k)
        return
    blocks = [list(blk) for blk in p.blocks]
    d, n = blocks[0]
    if n >= d + 2:
        L = VertexList(caterpillar_into(b, d, n).independent)
    elif n == d + 1:
        L = _d_plus1_into(b, d)
    else:
        if len(blocks) < 2 or n != d:
            raise ValueError(f"{p}: top block cannot seed an open realization")
        L = _d_dbar_into(b, d, blocks[1][0])
        blocks[1][1] -= 1
    for di, ni in blocks[1:]:
        L = L.prefix(di - 1)
        if ni:
            L = add_layer(b, L, ni, di, check=False)


def build_connected_open(p: Profile) -> Realization:
    if not check_connected_open(p):
        raise ValueError(f"{p} has no connected max-open realization")
    d_top, n_top = p.blocks[0]
    if p.ell == 1 and n_top >= d_top + 2:
        return build_uniform_open(d_top, n_top)
    b = GraphBuilder()
    _grow_open(b, p)
    return Realization(b.freeze(), Mode.MAX_OPEN)


def find_open_split(p: Profile) -> tuple[Profile, Profile] | None:
    """First split ``(rest, part)`` whose rest is empty or connected-realizable."""
    if p.isolated:
        return None
    for rest, part in split_candidates(p):
        if rest.is_empty() or check_connected_open(rest):
            if not part.is_empty() or not rest.is_empty():
                return rest, part
    return None


def check_general_open(p: Profile) -> bool:
    return find_open_split(p) is not None


def build_general_open(p: Profile) -> Realization:
    split = find_open_split(p)
    if split is None:
        raise ValueError(f"{p} has no max-open realization")
    rest, part = split
    b = GraphBuilder()
    if not rest.is_empty():
        _grow_open(b, rest)
    ones = part.count_of(1)
    if part.ell == 2:
        _star_into(b, part.blocks[0][0])
        ones -= 1
    for _ in range(ones // 2):
        u, v = b.add_vertices(2)
        b.add_edge(u, v)
    return Realization(b.freeze(), Mode.MAX_OPEN)
