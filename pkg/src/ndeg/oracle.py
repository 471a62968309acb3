"""Exhaustive ground truth over all labeled simple graphs on n <= 7 vertices.

Every adjacency mask over the C(n,2) vertex pairs is evaluated in vectorized
chunks.  Mask bit ``k`` is the k-th pair of ``itertools.combinations(range(n), 2)``,
so "first witness" means the smallest such mask.  Only graphs without
isolated vertices are tabulated; zero demands are re-attached afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .graphcore import Graph, Mode
from .profile import Profile

DEFAULT_LIMIT = 7
HARD_LIMIT = 8
CHUNK = 1 << 15


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class OracleQuery:
    profile: Profile
    mode: Mode
    require_connected: bool = False
    n_limit: int = DEFAULT_LIMIT

    def __post_init__(self) -> None:
        if self.n_limit > HARD_LIMIT:
            raise OracleLimitError(f"n_limit {self.n_limit} exceeds {HARD_LIMIT}")
        if self.profile.n > self.n_limit:
            raise OracleLimitError(f"profile length {self.profile.n} exceeds n_limit {self.n_limit}")


def _pairs(n: int) -> np.ndarray:
    return np.array(list(combinations(range(n), 2)), dtype=np.int64).reshape(-1, 2)


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = _pairs(n)
    bits = [(int(u), int(v)) for k, (u, v) in enumerate(pairs) if mask >> k & 1]
    return Graph(n, bits)


def _chunk_tables(n: int, lo: int, hi: int):
    """Per-mask degrees, the three value vectors and connectivity for masks in [lo, hi)."""
    pairs = _pairs(n)
    masks = np.arange(lo, hi, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(len(pairs))) & 1).astype(bool)
    adj = np.zeros((len(masks), n, n), dtype=bool)
    adj[:, pairs[:, 0], pairs[:, 1]] = bits
    adj[:, pairs[:, 1], pairs[:, 0]] = bits
    deg = adj.sum(axis=2)
    eye = np.eye(n, dtype=bool)
    closed = adj | eye
    dg = np.broadcast_to(deg[:, None, :], adj.shape)
    max_closed = np.where(closed, dg, 0).max(axis=2)
    min_closed = np.where(closed, dg, n).min(axis=2)
    max_open = np.where(adj, dg, 0).max(axis=2)
    reach = closed.astype(np.float32)
    steps = 1
    while steps < n:
        reach = (reach @ reach > 0).astype(np.float32)
        steps *= 2
    connected = reach[:, 0, :].all(axis=1)
    no_iso = deg.min(axis=1) > 0
    return masks, {Mode.MAX_CLOSED: max_closed, Mode.MIN_CLOSED: min_closed,
                   Mode.MAX_OPEN: max_open}, connected, no_iso


def _keys(values: np.ndarray, n: int) -> np.ndarray:
    """Encode each row's sorted multiset as one integer (base n)."""
    s = np.sort(values, axis=1)
    weights = n ** np.arange(values.shape[1], dtype=np.int64)
    return (s.astype(np.int64) * weights).sum(axis=1)


def _key_of(p: Profile, n: int) -> int:
    seq = sorted(p.sequence())
    return int(sum(v * n ** i for i, v in enumerate(seq)))


def _decode(key: int, n: int) -> Profile:
    vals = []
    for _ in range(n):
        key, r = divmod(key, n)
        vals.append(r)
    return Profile.from_sequence(vals)


def _check_n(n: int, allow_n8: bool) -> None:
    if n < 1:
        raise OracleLimitError("n must be positive")
    limit = HARD_LIMIT if allow_n8 else DEFAULT_LIMIT
    if n > limit:
        raise OracleLimitError(f"n={n} exceeds oracle limit {limit}")


@lru_cache(maxsize=None)
def _table(n: int) -> tuple[np.ndarray, dict[Mode, np.ndarray], np.ndarray]:
    """(masks, keys per mode, connected) over isolated-vertex-free graphs, n <= 7."""
    masks_all, keys_all, conn_all = [], {m: [] for m in Mode}, []
    total = 1 << (n * (n - 1) // 2)
    for lo in range(0, total, CHUNK):
        masks, vals, conn, ok = _chunk_tables(n, lo, min(total, lo + CHUNK))
        masks_all.append(masks[ok])
        conn_all.append(conn[ok])
        for m in Mode:
            keys_all[m].append(_keys(vals[m][ok], n))
    return (np.concatenate(masks_all),
            {m: np.concatenate(v) for m, v in keys_all.items()},
            np.concatenate(conn_all))


def _stream(n: int):
    total = 1 << (n * (n - 1) // 2)
    for lo in range(0, total, CHUNK):
        masks, vals, conn, ok = _chunk_tables(n, lo, min(total, lo + CHUNK))
        yield masks[ok], {m: _keys(vals[m][ok], n) for m in Mode}, conn[ok]


def _chunks(n: int, allow_n8: bool):
    _check_n(n, allow_n8)
    if n <= DEFAULT_LIMIT:
        yield _table(n)
    else:
        yield from _stream(n)


def oracle_realizable(q: OracleQuery) -> Graph | None:
    """First witness graph by mask order, or ``None``.

    Zero demands become trailing isolated vertices; in the open mode they
    are never realizable.
    """
    p = q.profile
    core = p.stripped()
    if p.isolated and q.mode is Mode.MAX_OPEN:
        return None
    if core.n == 0:
        return Graph(p.n)
    if core.n == 1:
        return None
    allow8 = q.n_limit >= HARD_LIMIT
    target = _key_of(core, core.n)
    for masks, keys, conn in _chunks(core.n, allow8):
        hit = keys[q.mode] == target
        if q.require_connected:
            hit &= conn
        idx = np.flatnonzero(hit)
        if len(idx):
            g = mask_to_graph(core.n, int(masks[idx[0]]))
            return Graph(p.n, g.edges())
    return None


def oracle_all_profiles(n: int, mode: Mode, require_connected: bool = False,
                        include_isolated: bool = False, allow_n8: bool = False) -> set[Profile]:
    """Exact set of profiles of length ``n`` realized by some graph.

    By default only graphs without isolated vertices count; with
    ``include_isolated`` (closed modes) zero demands are allowed as well.
    """
    _check_n(n, allow_n8)
    out: set[Profile] = set()
    for masks, keys, conn in _chunks(n, allow_n8) if n >= 2 else ():
        sel = keys[mode][conn] if require_connected else keys[mode]
        out.update(_decode(int(k), n) for k in np.unique(sel))
    if include_isolated and mode is not Mode.MAX_OPEN:
        for k in range(1, n + 1):
            if n - k == 0:
                out.add(Profile((), n))
            elif n - k >= 2 and not require_connected:
                out.update(Profile(p.blocks, k)
                           for p in oracle_all_profiles(n - k, mode, False, False, allow_n8))
            elif n - k >= 2:
                out.update(Profile(p.blocks, k)
                           for p in oracle_all_profiles(n - k, mode, True, False, allow_n8))
    return out


def oracle_witnesses(p: Profile, mode: Mode, require_connected: bool = False) -> list[Graph]:
    """Every labeled realization of an isolated-free profile (n <= 7)."""
    core = p.stripped()
    if p.isolated or core.n < 2:
        raise ValueError("witness listing needs an isolated-free profile of length >= 2")
    masks, keys, conn = _table(_checked(core.n))
    hit = keys[mode] == _key_of(core, core.n)
    if require_connected:
        hit &= conn
    return [mask_to_graph(core.n, int(m)) for m in masks[hit]]


def _checked(n: int) -> int:
    _check_n(n, False)
    return n


def oracle_dlf(p: Profile, n_limit: int = 5) -> bool:
    """Brute force over realizations and leader functions for a disjoint
    leader/follower witness."""
    if p.n > n_limit or p.n > 5:
        raise OracleLimitError(f"leader-function enumeration is capped at n=5 (got {p.n})")
    if p.isolated:
        raise ValueError("isolated demands are outside the leader model")
    if p.n < 2:
        return False
    for g in oracle_witnesses(p, Mode.MIN_CLOSED):
        deg = g.degrees
        choices = []
        for v in range(g.n):
            closed = g.neighbors(v) + [v]
            low = min(deg[u] for u in closed)
            choices.append([u for u in closed if deg[u] == low])
        for leader in product(*choices):
            leaders = set(leader)
            followers = {v for v in range(g.n) if leader[v] != v}
            if not leaders & followers:
                return True
    return False
