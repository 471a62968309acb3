"""Maximum closed-neighborhood-degree profiles.

Realizations are grown from the highest block down.  Each new block of
vertices is hung off a *valid list*: an independent run of low-degree
vertices ``(a_1, ..., a_t)`` with ``deg(a_i) <= i``.  Every layer consumes
one list and hands back a shorter one, so the whole build is linear in
``sum(n_i + d_i)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .graphcore import Graph, GraphBuilder, Mode, Realization, ndeg_values
from .profile import Profile


class ListKind(enum.Enum):
    VALID = "valid"
    PSEUDO_VALID = "pseudo-valid"


@dataclass
class VertexList:
    vertices: list[int]
    kind: ListKind = ListKind.VALID

    def __len__(self) -> int:
        return len(self.vertices)

    def prefix(self, size: int) -> VertexList:
        return VertexList(self.vertices[:max(size, 0)], self.kind)

    def holds_in(self, g: GraphBuilder) -> bool:
        """Check the degree bounds and independence against ``g``."""
        vs = self.vertices
        for i, v in enumerate(vs, start=1):
            if self.kind is ListKind.VALID and g.deg(v) > i:
                return False
            if self.kind is ListKind.PSEUDO_VALID and g.deg(v) != 2:
                return False
        members = set(vs)
        if len(members) != len(vs):
            return False
        return not any(u in members for v in vs for u in g.adj[v])


@dataclass
class Caterpillar:
    """Vertex roles of a caterpillar realization of ``(d^k)``."""
    vertices: list[int]
    spine: list[int]          # s_0 .. s_{alpha+1}
    independent: list[int]    # s_0, s_{alpha+1}, then the hairs of s_alpha


def _caterpillar_shape(d: int, k: int) -> tuple[int, int]:
    """Spine length parameter alpha and the number of shared hairs."""
    if d < 1 or k < d + 1:
        raise ValueError(f"caterpillar needs k >= d+1 (d={d}, k={k})")
    if d == 1 and k != 2:
        raise ValueError("a connected (1^k) realization exists only for k=2")
    if d == 1:
        alpha = 0
    elif d == 2:
        alpha = k - 2
    else:
        alpha = -(-(k - 2) // (d - 1))
    return alpha, 2 + alpha * (d - 1) - k


def caterpillar_into(b: GraphBuilder, d: int, k: int, first: int | None = None) -> Caterpillar:
    """Add a connected tree-like realization of ``(d^k)`` to ``b``.

    A path ``s_0 .. s_{alpha+1}`` carries ``d-2`` pendant hairs on each
    inner vertex; surplus vertices are removed by sharing the first hairs of
    ``s_1`` and ``s_2``.  With ``first`` given, that existing vertex plays
    ``s_0`` and only ``k-1`` vertices are created.
    """
    alpha, surplus = _caterpillar_shape(d, k)
    s0 = b.add_vertex() if first is None else first
    spine = [s0] + b.add_vertices(alpha + 1)
    for x, y in zip(spine, spine[1:]):
        b.add_edge(x, y)
    hairs: list[list[int]] = []
    for i in range(1, alpha + 1):
        if i == 2 and surplus:
            row = hairs[0][:surplus] + b.add_vertices(d - 2 - surplus)
        else:
            row = b.add_vertices(d - 2)
        for h in row:
            b.add_edge(spine[i], h)
        hairs.append(row)
    last = sorted(hairs[-1], key=b.deg) if hairs else []
    indep = [spine[0], spine[-1]] + last
    if d == 1:
        indep = [spine[0]]
    made = spine[1:] + [h for row in hairs for h in row]
    made = list(dict.fromkeys(made))
    vertices = ([s0] if first is None else []) + made
    return Caterpillar(vertices, spine, indep)


def caterpillar_graph(d: int, k: int) -> tuple[Graph, list[int]]:
    """Vectorized :func:`caterpillar_into` on a fresh graph (same labels)."""
    alpha, surplus = _caterpillar_shape(d, k)
    spine = np.arange(alpha + 2)
    rows = np.full(alpha, d - 2, dtype=np.int64)
    if alpha >= 2:
        rows[1] -= surplus
    owner = np.repeat(spine[1:alpha + 1], rows)
    hairs = np.arange(alpha + 2, alpha + 2 + len(owner))
    us = [spine[:-1], owner]
    vs = [spine[1:], hairs]
    if surplus:
        us.append(np.full(surplus, 2))
        vs.append(hairs[:surplus])
    g = Graph.from_arrays(k, np.concatenate(us), np.concatenate(vs))
    if d == 1:
        return g, [0]
    if alpha == 0:
        last: list[int] = []
    else:
        lo = alpha + 2 + int(rows[:alpha - 1].sum())
        last = list(range(lo, lo + int(rows[alpha - 1])))
        if alpha == 2 and surplus:
            last = last + list(range(alpha + 2, alpha + 2 + surplus))
    return g, [0, alpha + 1] + last


def build_caterpillar(d: int, k: int) -> tuple[Realization, list[int]]:
    """Connected realization of ``(d^k)`` and its independent set ``S``."""
    g, S = caterpillar_graph(d, k)
    return Realization(g, Mode.MAX_CLOSED, marks={"S": S}), S


def add_layer(g: GraphBuilder, L: VertexList, k: int, d: int, check: bool = True) -> VertexList:
    """Attach ``k`` new vertices whose max neighborhood degree is ``d``.

    ``L`` must have ``d-1`` entries (valid, or pseudo-valid when ``d >= 3``).
    New edges stay inside ``W x (W u L)``.  Returns a valid list of size
    ``d-2`` for the next layer.
    """
    if d < 2 or k < 1:
        raise ValueError(f"add_layer needs d >= 2 and k >= 1 (d={d}, k={k})")
    if len(L) != d - 1:
        raise ValueError(f"list has {len(L)} entries, expected {d - 1}")
    if L.kind is ListKind.PSEUDO_VALID and d < 3:
        raise ValueError("a pseudo-valid list needs d >= 3")
    if check:
        if not L.holds_in(g):
            raise ValueError(f"list is not {L.kind.value} in the host graph")
        if not g.is_connected():
            raise ValueError("host graph must be connected")
    a = [None] + L.vertices          # 1-indexed like a_1 .. a_{d-1}
    if k < d:
        W = g.add_vertices(k)
        count, i = k, d - 1
        chunk: dict[int, list[int]] = {}
        while count:
            r = min(d - g.deg(a[i]), count)
            part = W[count - r:count]
            for w in part:
                g.add_edge(a[i], w)
            chunk[i] = part
            count -= r
            i -= 1
        i += 1  # last list entry that received a new neighbour
        for j in range(d - 1, 0, -1):
            if g.deg(a[i]) == d:
                break
            if j < i:
                g.add_edge(a[j], a[i])
            elif j > i:
                g.add_edge(a[i], chunk[j][0])
        if g.deg(a[i]) != d:
            raise RuntimeError("layer could not saturate its pivot vertex")
        out = (W + a[1:i])[:d - 2]
        return VertexList(out)
    cat = caterpillar_into(g, d, k + 1, first=a[1])
    j = 2
    while g.deg(a[1]) < d:
        g.add_edge(a[1], a[j])
        j += 1
    b_list = cat.independent[1:]
    return VertexList(b_list[:d - 2])


def check_connected_closed(p: Profile) -> bool:
    q = p.stripped()
    if q.ell == 0:
        return False
    if q == Profile(((1, 2),)):
        return True
    d_top, n_top = q.blocks[0]
    return n_top >= d_top + 1 and q.degrees[0] >= 2


def check_general_closed(p: Profile) -> bool:
    q = p.stripped()
    if q.ell == 0:
        return True
    d_top, n_top = q.blocks[0]
    d1, n1 = q.degrees[0], q.counts[0]
    return d_top <= n_top - 1 and (d1 >= 2 or n1 % 2 == 0)


def _grow_closed(b: GraphBuilder, q: Profile) -> list[tuple[int, int]]:
    """Build ``q`` (connected case, d_1 >= 2) into ``b``; returns vertex ranges per block."""
    blocks = q.blocks
    d_top, n_top = blocks[0]
    start = b.n
    cat = caterpillar_into(b, d_top, n_top)
    ranges = [(start, b.n)]
    if len(blocks) > 1:
        L = VertexList(cat.independent[:blocks[1][0] - 1])
        for idx in range(1, len(blocks)):
            di, ni = blocks[idx]
            start = b.n
            L = add_layer(b, L, ni, di, check=False)
            ranges.append((start, b.n))
            if idx + 1 < len(blocks):
                L = L.prefix(blocks[idx + 1][0] - 1)
    return ranges


def build_connected_closed(p: Profile) -> Realization:
    if not check_connected_closed(p):
        raise ValueError(f"{p} has no connected max-closed realization")
    q = p.stripped()
    if q.ell == 1 and not p.isolated:
        d, k = q.blocks[0]
        g, _ = caterpillar_graph(d, k)
        return Realization(g, Mode.MAX_CLOSED, marks={"layers": [(0, k)]})
    b = GraphBuilder()
    if q == Profile(((1, 2),)):
        b.add_vertices(2)
        b.add_edge(0, 1)
        ranges = [(0, 2)]
    else:
        ranges = _grow_closed(b, q)
    b.add_vertices(p.isolated)
    return Realization(b.freeze(), Mode.MAX_CLOSED, marks={"layers": ranges})


def build_general_closed(p: Profile) -> Realization:
    if not check_general_closed(p):
        raise ValueError(f"{p} has no max-closed realization")
    q = p.stripped()
    b = GraphBuilder()
    rest = q
    if q.ell and q.degrees[0] == 1:
        pairs = q.counts[0] // 2
        rest = q - Profile(((1, 2 * pairs),))
    if rest.ell:
        _grow_closed(b, rest)
    if q.ell and q.degrees[0] == 1:
        for _ in range(pairs):
            u, v = b.add_vertices(2)
            b.add_edge(u, v)
    b.add_vertices(p.isolated)
    return Realization(b.freeze(), Mode.MAX_CLOSED)


def substructure_holds(g: Graph, t: int) -> bool:
    """Vertices with closed max value >= t keep their values in the subgraph they induce."""
    vals = ndeg_values(g, Mode.MAX_CLOSED)
    keep = np.flatnonzero(vals >= t)
    h, old = g.induced(keep.tolist())
    return bool(np.array_equal(ndeg_values(h, Mode.MAX_CLOSED), vals[old]))
