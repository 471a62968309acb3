"""Minimum closed-neighborhood-degree profiles: conditions and builders.

Blocks are indexed from the smallest degree: ``d[0] = d_1 < ... < d[l-1]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graphcore import Graph, GraphBuilder, Mode, Realization, verify
from .profile import Profile


class Verdict(enum.Enum):
    REALIZABLE = "realizable"
    NOT_REALIZABLE = "not-realizable"
    UNKNOWN = "unknown"


class ConstructionError(RuntimeError):
    """A builder produced a graph that failed its own post-verification."""


def _cap(n: int, d: int) -> int:
    # floor(n*d/(d+1)): the most vertices a block can spare outside its leaders
    return n * d // (d + 1)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass
class MinCheckReport:
    nc1_per_i: list[bool]
    nc2: bool
    sc_per_i: list[bool]
    nc3: bool | None
    verdict: Verdict
    notes: list[str] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [f"NC1[{i + 1}]: {'ok' if ok else 'FAIL'}" for i, ok in enumerate(self.nc1_per_i)]
        out.append(f"NC2: {'ok' if self.nc2 else 'FAIL'}")
        out.extend(f"SC[{i + 1}]: {'ok' if ok else 'FAIL'}" for i, ok in enumerate(self.sc_per_i))
        if self.nc3 is not None:
            out.append(f"NC3: {'ok' if self.nc3 else 'FAIL'}")
        out.extend(self.notes)
        out.append(f"verdict: {self.verdict.value}")
        return out


def _blocks(p: Profile) -> tuple[tuple[int, ...], tuple[int, ...]]:
    p = p.stripped()
    if p.ell == 0:
        raise ValueError("profile has no positive demands")
    return p.degrees, p.counts


def sc_per_block(p: Profile) -> list[bool]:
    d, n = _blocks(p)
    out, acc = [], 0
    for di, ni in zip(d, n):
        acc += _cap(ni, di)
        out.append(di <= acc)
    return out


def nc3_holds(p: Profile) -> bool:
    d, n = _blocks(p)
    if len(d) != 3:
        raise ValueError("the three-block condition needs exactly three blocks")
    if d[1] <= _cap(n[0], d[0]) + _cap(n[1], d[1]):
        return True
    return d[2] + 1 <= sum(n) - (1 + _ceil_div(d[1] - n[1], d[0]))


def check(p: Profile) -> MinCheckReport:
    """Evaluate the necessary and sufficient conditions and decide."""
    d, n = _blocks(p)
    ell = len(d)
    prefix, nc1 = 0, []
    for di, ni in zip(d, n):
        prefix += ni
        nc1.append(di <= prefix - 1)
    nc2 = d[-1] <= sum(_cap(ni, di) for di, ni in zip(d, n))
    sc = sc_per_block(p)
    nc3 = None
    if ell <= 2:
        ok = all(nc1) and nc2
        verdict = Verdict.REALIZABLE if ok else Verdict.NOT_REALIZABLE
    elif ell == 3:
        nc3 = nc3_holds(p)
        ok = nc1[0] and nc1[1] and nc2 and nc3
        verdict = Verdict.REALIZABLE if ok else Verdict.NOT_REALIZABLE
    elif all(sc):
        verdict = Verdict.REALIZABLE
    elif not (all(nc1) and nc2):
        verdict = Verdict.NOT_REALIZABLE
    else:
        verdict = Verdict.UNKNOWN
    return MinCheckReport(nc1, nc2, sc, nc3, verdict)


def check_dlf(p: Profile) -> bool:
    """Whether some realization has disjoint leader and follower sets."""
    return all(sc_per_block(p))


def gamma_inflate(p: Profile) -> Profile:
    """Scale every block count by (d_1+1)/d_1, rounding up."""
    d, n = _blocks(p)
    report = check(p)
    if not all(report.nc1_per_i):
        raise ValueError(f"{p} violates NC1")
    d1 = d[0]
    return Profile(tuple((di, _ceil_div(ni * (d1 + 1), d1))
                         for di, ni in reversed(list(zip(d, n)))))


# -- constructions -------------------------------------------------------

def _uniform_into(b: GraphBuilder, n: int, d: int) -> tuple[list[int], list[int]]:
    """Add ``n`` vertices carrying the leader stars of the uniform
    construction; returns ``(A, B)`` without the clique on ``B``."""
    q = _ceil_div(n, d + 1)
    r = q * (d + 1) - n
    A = b.add_vertices(q)
    rows = [b.add_vertices(d)]
    for i in range(1, q):
        # the first r slots of the second star are shared with the first
        rows.append(rows[0][:r] + b.add_vertices(d - r) if i == 1 else b.add_vertices(d))
    for a, row in zip(A, rows):
        for x in row:
            b.add_edge(a, x)
    B = list(rows[0])
    if q > 1:
        B.extend(rows[1][r:])
    for row in rows[2:]:
        B.extend(row)
    return A, B


def _add_clique(b: GraphBuilder, vs: list[int]) -> None:
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            b.add_edge(u, v)


def _append_isolated(b: GraphBuilder, k: int) -> None:
    b.add_vertices(k)


def build_uniform(n: int, d: int) -> Realization:
    """Uniform profile (d^n); marks ``A`` (degree-d leaders) and ``B`` (clique)."""
    if d < 1 or n < d + 1:
        raise ValueError(f"(d^n) with d={d}, n={n} needs n >= d+1")
    b = GraphBuilder()
    A, B = _uniform_into(b, n, d)
    _add_clique(b, B)
    real = Realization(b.freeze(), Mode.MIN_CLOSED, marks={"A": A, "B": B})
    _post_verify(real, Profile(((d, n),)))
    return real


def build_sc(p: Profile) -> Realization:
    """Layered construction for profiles meeting the sufficient condition.

    Exposes the leader map under which every leader leads itself.
    """
    if not all(sc_per_block(p)):
        raise ValueError(f"{p} violates the sufficient condition")
    d, n = _blocks(p)
    b = GraphBuilder()
    R_all: list[int] = []
    leader_sets: list[list[int]] = []
    R_sets: list[list[int]] = []
    for di, ni in zip(d, n):
        if ni > di + 1:
            L, R = _uniform_into(b, ni, di)
        else:
            L = b.add_vertices(1)
            R = b.add_vertices(ni - 1)
            a = L[0]
            for x in R:
                b.add_edge(a, x)
            for x in R_all[:di + 1 - ni]:
                b.add_edge(a, x)
        leader_sets.append(L)
        R_sets.append(R)
        R_all.extend(R)
    _add_clique(b, R_all)
    _append_isolated(b, p.isolated)
    leaders: dict[int, int] = {}
    for L, R in zip(leader_sets, R_sets):
        Lset = set(L)
        for a in L:
            leaders[a] = a
        for x in R:
            leaders[x] = min(y for y in b.adj[x] if y in Lset)
    for v in range(b.n - p.isolated, b.n):
        leaders[v] = v
    real = Realization(b.freeze(), Mode.MIN_CLOSED, leaders=leaders,
                       marks={"L": sorted(v for L in leader_sets for v in L), "R": R_all})
    _post_verify(real, p)
    return real


def _tri_attempt(d: tuple[int, ...], n: tuple[int, ...], c: int) -> GraphBuilder | None:
    d1, d2, d3 = d
    n1, n2, n3 = n
    N = n1 + n2 + n3 - 1 - c
    a = n1 + n2 - c - 1          # neighbours of w inside Z
    alpha = d2 - a               # neighbours of w among the first-block leaders
    y = n1 - c - 1               # |Y|
    if N < d3 + 1 or not 1 <= alpha <= c or y < 0:
        return None
    if _cap(N, d3) < a:
        return None
    slots = [d1 - 1] * alpha + [d1] * (c - alpha)
    if max(slots) > y or sum(slots) < y:
        return None
    b = GraphBuilder()
    L1 = b.add_vertices(c)
    w = b.add_vertex()
    A3, B3 = _uniform_into(b, N, d3)
    _add_clique(b, B3)
    wz = B3[:a]
    for z in wz:
        b.add_edge(w, z)
    for x in L1[:alpha]:
        b.add_edge(w, x)
    Y = wz[:y]
    pos = 0
    for x, s in zip(L1, slots):
        for _ in range(s):
            b.add_edge(x, Y[pos % y])
            pos += 1
    return b


def build_tri(p: Profile) -> Realization:
    """Three-block profiles that fail the sufficient condition at the middle block.

    The number of first-block leaders starts at ceil((d_2-n_2)/d_1) and is
    raised while the counts do not fit; each candidate is post-verified.
    """
    d, n = _blocks(p)
    rep = check(p)
    if len(d) != 3 or rep.verdict is not Verdict.REALIZABLE:
        raise ValueError(f"{p} does not meet the three-block conditions")
    if all(rep.sc_per_i):
        return build_sc(p)
    start = max(1, _ceil_div(d[1] - n[1], d[0]))
    target = p.stripped()
    for c in range(start, n[0]):
        b = _tri_attempt(d, n, c)
        if b is None:
            continue
        g = b.freeze()
        if verify(g, target, Mode.MIN_CLOSED):
            _append_isolated(b, p.isolated)
            return Realization(b.freeze(), Mode.MIN_CLOSED)
    raise ConstructionError(f"no three-block layout verified for {p}")


def realize(p: Profile) -> Realization:
    """Dispatch to the matching builder or raise ``ValueError``."""
    rep = check(p)
    if all(rep.sc_per_i):
        return build_sc(p)
    if rep.verdict is Verdict.REALIZABLE and p.ell == 3:
        return build_tri(p)
    raise ValueError(f"{p}: {rep.verdict.value}")


def _post_verify(real: Realization, p: Profile) -> None:
    if not verify(real.graph, p, Mode.MIN_CLOSED):
        raise ConstructionError(f"construction for {p} failed verification")


def leader_witness_ok(g: Graph, leaders: dict[int, int]) -> bool:
    """Leaders lie in N[v] with minimum degree, and no leader follows someone else."""
    deg = g.degrees
    for v in range(g.n):
        x = leaders[v]
        closed = g.neighbors(v) + [v]
        if x not in closed or deg[x] != min(deg[u] for u in closed):
            return False
    L = set(leaders.values())
    F = {v for v, x in leaders.items() if x != v}
    return not (L & F)
