"""Simple undirected graphs, neighborhood-degree extraction and I/O."""

from __future__ import annotations

import enum
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .profile import Profile


class Mode(enum.Enum):
    MIN_CLOSED = "min-closed"
    MAX_CLOSED = "max-closed"
    MAX_OPEN = "max-open"

    @classmethod
    def parse(cls, text: str) -> Mode:
        key = text.strip().lower().replace("_", "-")
        for m in cls:
            if m.value == key:
                return m
        raise ValueError(f"unknown mode {text!r}")


class GraphError(ValueError):
    pass


class Graph:
    """Immutable labeled simple graph on vertices ``0..n-1``.

    Edges live in two parallel numpy arrays with ``u < v``.  Adjacency lists
    are derived lazily for traversal.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        pairs = np.array(list(edges), dtype=np.int64).reshape(-1, 2)
        self._init(n, pairs[:, 0], pairs[:, 1])

    @classmethod
    def from_arrays(cls, n: int, us: Sequence[int], vs: Sequence[int]) -> Graph:
        g = cls.__new__(cls)
        g._init(n, np.asarray(us, dtype=np.int64), np.asarray(vs, dtype=np.int64))
        return g

    def _init(self, n: int, us: np.ndarray, vs: np.ndarray) -> None:
        if n < 0:
            raise GraphError("negative vertex count")
        self.n = int(n)
        lo, hi = np.minimum(us, vs), np.maximum(us, vs)
        if len(lo):
            if lo.min() < 0 or hi.max() >= n:
                raise GraphError("edge endpoint out of range")
            if np.any(lo == hi):
                raise GraphError("self-loop")
            keys = lo * n + hi
            if len(np.unique(keys)) != len(keys):
                raise GraphError("multi-edge")
        self._u, self._v = lo, hi

    @property
    def m(self) -> int:
        return len(self._u)

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return self._u, self._v

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        order = np.lexsort((self._v, self._u))
        return list(zip(self._u[order].tolist(), self._v[order].tolist()))

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.bincount(self._u, minlength=self.n)
        deg += np.bincount(self._v, minlength=self.n)
        return deg

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    @cached_property
    def _csr(self) -> tuple[np.ndarray, np.ndarray]:
        src = np.concatenate([self._u, self._v])
        dst = np.concatenate([self._v, self._u])
        order = np.lexsort((dst, src))
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=self.n), out=indptr[1:])
        return indptr, dst[order]

    def neighbors(self, v: int) -> list[int]:
        indptr, idx = self._csr
        return idx[indptr[v]:indptr[v + 1]].tolist()

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def induced(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabeled to ``0..k-1``; returns it with the old labels."""
        old = sorted(set(keep))
        new = np.full(self.n, -1, dtype=np.int64)
        new[old] = np.arange(len(old))
        mask = (new[self._u] >= 0) & (new[self._v] >= 0)
        return Graph.from_arrays(len(old), new[self._u[mask]], new[self._v[mask]]), old

    def relabel(self, perm: Sequence[int]) -> Graph:
        p = np.asarray(perm, dtype=np.int64)
        return Graph.from_arrays(self.n, p[self._u], p[self._v])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges() == other.edges()

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class GraphBuilder:
    """Append-only graph under construction; used by all builders.

    Keeps adjacency lists so the layering procedures can query degrees and
    neighbors in O(1) amortized time.
    """

    def __init__(self, n: int = 0):
        self.adj: list[list[int]] = [[] for _ in range(n)]

    @property
    def n(self) -> int:
        return len(self.adj)

    def add_vertex(self) -> int:
        self.adj.append([])
        return len(self.adj) - 1

    def add_vertices(self, k: int) -> list[int]:
        start = len(self.adj)
        self.adj.extend([] for _ in range(k))
        return list(range(start, start + k))

    def add_edge(self, u: int, v: int) -> None:
        self.adj[u].append(v)
        self.adj[v].append(u)

    def deg(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a, b = self.adj[u], self.adj[v]
        return v in a if len(a) <= len(b) else u in b

    def is_connected(self) -> bool:
        return _bfs_connected(self.n, self.adj.__getitem__, range(self.n))

    def freeze(self) -> Graph:
        us: list[int] = []
        vs: list[int] = []
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    us.append(u)
                    vs.append(v)
        return Graph.from_arrays(self.n, us, vs)


def _bfs_connected(n, neighbors, vertices) -> bool:
    vertices = list(vertices)
    if len(vertices) <= 1:
        return True
    seen = bytearray(n)
    start = vertices[0]
    seen[start] = 1
    queue = deque([start])
    reached = 1
    while queue:
        x = queue.popleft()
        for y in neighbors(x):
            if not seen[y]:
                seen[y] = 1
                reached += 1
                queue.append(y)
    return reached == len(vertices)


def is_connected(g: Graph, ignore_isolated: bool = False) -> bool:
    """BFS connectivity; with ``ignore_isolated`` degree-0 vertices are skipped."""
    if ignore_isolated:
        vertices = np.flatnonzero(g.degrees > 0).tolist()
    else:
        vertices = range(g.n)
    return _bfs_connected(g.n, g.neighbors, vertices)


def ndeg_values(g: Graph, mode: Mode) -> np.ndarray:
    """Per-vertex min/max degree over N[v] (closed) or N(v) (open)."""
    deg = g.degrees
    u, v = g.edge_arrays()
    if mode is Mode.MAX_CLOSED:
        out = deg.copy()
        np.maximum.at(out, u, deg[v])
        np.maximum.at(out, v, deg[u])
    elif mode is Mode.MIN_CLOSED:
        out = deg.copy()
        np.minimum.at(out, u, deg[v])
        np.minimum.at(out, v, deg[u])
    elif mode is Mode.MAX_OPEN:
        if np.any(deg == 0):
            raise GraphError("open maximum is undefined on an isolated vertex")
        out = np.zeros(g.n, dtype=deg.dtype)
        np.maximum.at(out, u, deg[v])
        np.maximum.at(out, v, deg[u])
    else:  # pragma: no cover
        raise ValueError(mode)
    return out


def profile_of(g: Graph, mode: Mode) -> Profile:
    return Profile.from_sequence(ndeg_values(g, mode).tolist())


def verify(g: Graph, p: Profile, mode: Mode, require_connected: bool = False) -> bool:
    try:
        got = profile_of(g, mode)
    except GraphError:
        return False
    if got != p:
        return False
    return not require_connected or is_connected(g, ignore_isolated=True)


class Realization:
    """A witness graph together with the mode it realizes.

    ``marks`` holds named vertex groups exposed by a builder (for example the
    leader/clique sets of the uniform min construction or a valid list).
    """

    def __init__(self, graph: Graph, mode: Mode, marks: dict | None = None,
                 leaders: dict[int, int] | None = None):
        self.graph = graph
        self.mode = mode
        self.marks = marks or {}
        self.leaders = leaders

    @cached_property
    def assignment(self) -> np.ndarray:
        return ndeg_values(self.graph, self.mode)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph, ignore_isolated=True)

    @property
    def profile(self) -> Profile:
        return Profile.from_sequence(self.assignment.tolist())

    def __repr__(self) -> str:
        return f"Realization({self.graph!r}, {self.mode.value})"


# -- serialization -------------------------------------------------------

def serialize(g: Graph, fmt: str = "edgelist") -> str:
    edges = g.edges()
    if fmt == "edgelist":
        lines = [f"{g.n} {len(edges)}"]
        lines.extend(f"{u} {v}" for u, v in edges)
        return "\n".join(lines) + "\n"
    if fmt == "dot":
        lines = ["graph {"]
        lines.extend(f"  {v};" for v in range(g.n))
        lines.extend(f"  {u} -- {v};" for u, v in edges)
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse_edgelist(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("missing 'n m' header")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header says {m} edges, found {len(edges)}")
    return Graph(n, edges)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    us, vs, off = [], [], 0
    for g in graphs:
        a, b = g.edge_arrays()
        us.append(a + off)
        vs.append(b + off)
        off += g.n
    if not us:
        return Graph(0)
    return Graph.from_arrays(off, np.concatenate(us), np.concatenate(vs))

