"""Counting, listing and uniform sampling of realizable max-degree profiles.

Every family is listed in descending lexicographic order of the
non-increasing demand sequence.  A family splits into *blocks* indexed by
the top degree ``d``: a fixed prefix of ``d``'s followed by a free tail of
bounded non-increasing values.  Tails are counted with binomials, which
gives exact ranking and unranking with plain Python integers.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator

from .maxndeg_open import check_general_open
from .profile import Profile

ENUM_CAP = 22
EXACT_OPEN_CAP = 12


class Family(enum.Enum):
    CCON = "CCon"        # connected, closed neighborhoods
    OCON = "OCon"        # connected, open neighborhoods
    CGEN = "CGen"        # any graph, closed neighborhoods
    OGENL = "OGenL"      # lower bound, any graph, open neighborhoods
    OGENU = "OGenU"      # upper bound, any graph, open neighborhoods
    OGENEXACT = "OGenExact"

    @classmethod
    def parse(cls, text: str) -> Family:
        key = text.strip().lower()
        for fam in cls:
            if fam.value.lower() == key:
                return fam
        raise ValueError(f"unknown family {text!r}")


LISTABLE = (Family.CCON, Family.OCON, Family.CGEN)


def f(i: int, j: int, k: int) -> int:
    """Non-increasing length-``k`` sequences over the values ``i..j``."""
    if not (j >= i >= 0 and k >= 0):
        raise ValueError(f"f needs j >= i >= 0 and k >= 0 (got {i}, {j}, {k})")
    return math.comb(k + j - i, k)


def s_n(n: int) -> int:
    """All non-increasing sequences of length n over ``1..n-1``."""
    return f(1, n - 1, n)


# -- tails ---------------------------------------------------------------
# A tail is a non-increasing sequence of length k with values <= hi.  With
# even=False the values are >= 2; with even=True the value 1 is allowed but
# must occur an even number of times.

@lru_cache(maxsize=None)
def _tails(hi: int, k: int, even: bool) -> int:
    if k == 0:
        return 1
    if not even:
        return f(2, hi, k) if hi >= 2 else 0
    total = 1 if k % 2 == 0 else 0          # all ones
    for v in range(2, hi + 1):
        total += _tails(v, k - 1, True)
    return total


def _first_counts(hi: int, k: int, even: bool) -> Iterator[tuple[int, int]]:
    """(first value, number of tails starting with it), descending."""
    for v in range(hi, 1, -1):
        yield v, _tails(v, k - 1, even)
    if even:
        yield 1, 1 if k % 2 == 0 else 0


def _unrank_tail(hi: int, k: int, even: bool, r: int) -> list[int]:
    out: list[int] = []
    while k:
        for v, c in _first_counts(hi, k, even):
            if r < c:
                break
            r -= c
        else:  # pragma: no cover - guarded by the caller
            raise IndexError("tail rank out of range")
        out.append(v)
        if v == 1:
            return out + [1] * (k - 1)
        hi, k = v, k - 1
    return out


def _rank_tail(hi: int, k: int, even: bool, tail: list[int]) -> int:
    r = 0
    for pos, x in enumerate(tail):
        for v, c in _first_counts(hi, k - pos, even):
            if v == x:
                break
            r += c
        if x == 1:
            return r
        hi = x
    return r


def _iter_tails(hi: int, k: int, even: bool) -> Iterator[list[int]]:
    if k == 0:
        yield []
        return
    for v in range(hi, 1, -1):
        for rest in _iter_tails(v, k - 1, even):
            yield [v] + rest
    if even and k % 2 == 0:
        yield [1] * k


# -- family layout -------------------------------------------------------

@dataclass(frozen=True)
class _Block:
    prefix: tuple[int, ...]
    hi: int = 0
    k: int = 0
    even: bool = False
    skip: tuple[int, ...] | None = None     # one excluded tail, if any

    @property
    def size(self) -> int:
        return _tails(self.hi, self.k, self.even) - (self.skip is not None)

    def unrank(self, r: int) -> list[int]:
        if self.skip is not None and r >= _rank_tail(self.hi, self.k, self.even, list(self.skip)):
            r += 1
        return list(self.prefix) + _unrank_tail(self.hi, self.k, self.even, r)

    def rank(self, tail: list[int]) -> int:
        r = _rank_tail(self.hi, self.k, self.even, tail)
        if self.skip is not None and r > _rank_tail(self.hi, self.k, self.even, list(self.skip)):
            r -= 1
        return r

    def __iter__(self) -> Iterator[list[int]]:
        for t in _iter_tails(self.hi, self.k, self.even):
            if self.skip is None or tuple(t) != self.skip:
                yield list(self.prefix) + t


@lru_cache(maxsize=None)
def _layout(n: int, fam: Family) -> tuple[_Block, ...]:
    if fam not in LISTABLE:
        raise ValueError(f"{fam.value} cannot be listed; use the exact open filter")
    if n < 2:
        raise ValueError("n must be at least 2")
    if n == 2:
        return (_Block((1, 1)),)
    blocks: list[_Block] = []
    for d in range(n - 1, 1, -1):
        if fam is Family.CCON:
            blocks.append(_Block((d,) * (d + 1), d, n - d - 1))
        elif fam is Family.CGEN:
            blocks.append(_Block((d,) * (d + 1), d, n - d - 1, even=True))
        else:
            skip = (d, 2) if d >= 3 and n == d + 2 else None
            blocks.append(_Block((d,) * d, d, n - d, skip=skip))
            if d == n - 1:
                blocks.append(_Block((d,) * d + (1,)))   # the star
    if fam is Family.CGEN and n % 2 == 0:
        blocks.append(_Block((1,) * n))
    return tuple(b for b in blocks if b.size)


def _structural_count(n: int, fam: Family) -> int:
    if fam in LISTABLE:
        return sum(b.size for b in _layout(n, fam))
    if fam is Family.OGENU:
        return sum(math.comb(n - 1, d - 1) for d in range(1, n))
    if fam is Family.OGENL:
        if n <= 4:
            return {2: 1, 3: 2, 4: 5}[n]
        return _structural_count(n - 2, fam) + _structural_count(n, Family.OCON)
    return len(open_general_set(n))


def count(n: int, fam: Family | str) -> int:
    """Exact family size at length ``n`` from the block structure or recursion."""
    fam = Family.parse(fam) if isinstance(fam, str) else fam
    if n < 2:
        raise ValueError("n must be at least 2")
    return _structural_count(n, fam)


def closed_form(n: int, fam: Family | str) -> int:
    """The published closed forms with their small-n special values."""
    fam = Family.parse(fam) if isinstance(fam, str) else fam
    if n < 2:
        raise ValueError("n must be at least 2")
    if fam is Family.CCON:
        return 1 if n == 2 else 2 ** (n - 3)
    if fam is Family.OCON:
        return {2: 1, 3: 2, 4: 4}.get(n, 2 ** (n - 2) - 1)
    if fam is Family.CGEN:
        return (2 ** (n - 1) + (-1) ** n) // 3
    if fam is Family.OGENL:
        if n == 2:
            return 1
        return -(-(2 ** n - 2) // 3) - -(-(n - 4) // 2)
    if fam is Family.OGENU:
        return 2 ** (n - 1) - 1
    raise ValueError(f"{fam.value} has no closed form")


def enumerate_profiles(n: int, fam: Family | str, cap: int = ENUM_CAP) -> Iterator[Profile]:
    """Every member once, in descending lexicographic order."""
    fam = Family.parse(fam) if isinstance(fam, str) else fam
    if n > cap:
        raise ValueError(f"n={n} exceeds enumeration cap {cap}")
    if fam is Family.OGENEXACT:
        yield from sorted(open_general_set(n), key=lambda p: p.sequence(), reverse=True)
        return
    for block in _layout(n, fam):
        for seq in block:
            yield Profile.from_sequence(seq)


def unrank(n: int, fam: Family | str, r: int) -> Profile:
    fam = Family.parse(fam) if isinstance(fam, str) else fam
    if r < 0:
        raise IndexError("negative rank")
    for block in _layout(n, fam):
        if r < block.size:
            return Profile.from_sequence(block.unrank(r))
        r -= block.size
    raise IndexError("rank out of range")


def rank(p: Profile, fam: Family | str) -> int:
    fam = Family.parse(fam) if isinstance(fam, str) else fam
    seq = p.sequence()
    base = 0
    for block in _layout(p.n, fam):
        m = len(block.prefix)
        tail = seq[m:]
        if (tuple(seq[:m]) == block.prefix and len(tail) == block.k
                and all(1 <= x <= block.hi for x in tail)
                and (block.even or 1 not in tail)
                and (not block.even or tail.count(1) % 2 == 0)
                and (block.skip is None or tuple(tail) != block.skip)):
            return base + block.rank(tail)
        base += block.size
    raise ValueError(f"{p} is not in {fam.value}")


def sample(n: int, fam: Family | str, seed: int | random.Random | None = None) -> Profile:
    """Exactly uniform member: a uniform rank, then unranking."""
    fam = Family.parse(fam) if isinstance(fam, str) else fam
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return unrank(n, fam, rng.randrange(count(n, fam)))


@lru_cache(maxsize=None)
def open_general_set(n: int) -> frozenset[Profile]:
    """All open-realizable profiles of length n, by filtering every sequence."""
    if n > EXACT_OPEN_CAP:
        raise ValueError(f"exact open count is capped at n={EXACT_OPEN_CAP}")
    out = set()
    for seq in combinations_with_replacement(range(1, n), n):
        p = Profile.from_sequence(seq)
        if check_general_open(p):
            out.add(p)
    return frozenset(out)
