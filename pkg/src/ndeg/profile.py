"""Neighborhood-degree profiles in compact block form.

A profile such as ``3^4 2^1`` says: four vertices must see the value 3 and
one vertex must see the value 2.  Zero demands are kept apart in
``isolated`` because they can only be met by isolated vertices.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


class ProfileError(ValueError):
    """Raised for malformed profile text or invalid block data."""


@dataclass(frozen=True, order=True)
class Profile:
    blocks: tuple[tuple[int, int], ...] = ()
    isolated: int = 0

    def __post_init__(self) -> None:
        blocks = tuple((int(d), int(c)) for d, c in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        prev = None
        for d, c in blocks:
            if d < 1 or c < 1:
                raise ProfileError(f"bad block {d}^{c}")
            if prev is not None and d >= prev:
                raise ProfileError("block degrees must be strictly decreasing")
            prev = d
        if self.isolated < 0:
            raise ProfileError("negative isolated count")

    @classmethod
    def from_sequence(cls, values: Iterable[int]) -> Profile:
        """Build a profile from any multiset of demands (order ignored)."""
        counts = Counter()
        for v in values:
            v = int(v)
            if v < 0:
                raise ProfileError(f"negative entry {v}")
            counts[v] += 1
        return cls.from_counts(counts)

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> Profile:
        isolated = counts.get(0, 0)
        blocks = tuple(sorted(((d, c) for d, c in counts.items() if d > 0 and c > 0),
                              reverse=True))
        return cls(blocks, isolated)

    @property
    def n(self) -> int:
        return self.isolated + sum(c for _, c in self.blocks)

    @property
    def ell(self) -> int:
        return len(self.blocks)

    @property
    def degrees(self) -> tuple[int, ...]:
        """Distinct positive degrees, ascending (d_1 < ... < d_ell)."""
        return tuple(d for d, _ in reversed(self.blocks))

    @property
    def counts(self) -> tuple[int, ...]:
        """Block sizes aligned with :attr:`degrees` (n_1, ..., n_ell)."""
        return tuple(c for _, c in reversed(self.blocks))

    def count_of(self, d: int) -> int:
        if d == 0:
            return self.isolated
        for dd, c in self.blocks:
            if dd == d:
                return c
        return 0

    def as_counts(self) -> dict[int, int]:
        out = dict(self.blocks)
        if self.isolated:
            out[0] = self.isolated
        return out

    def sequence(self) -> list[int]:
        """Non-increasing list of all n demands."""
        out: list[int] = []
        for d, c in self.blocks:
            out.extend([d] * c)
        out.extend([0] * self.isolated)
        return out

    def stripped(self) -> Profile:
        """Same profile with the isolated demands removed."""
        return Profile(self.blocks) if self.isolated else self

    def is_empty(self) -> bool:
        return self.n == 0

    def __add__(self, other: Profile) -> Profile:
        counts = Counter(self.as_counts())
        counts.update(other.as_counts())
        return Profile.from_counts(counts)

    def __sub__(self, other: Profile) -> Profile:
        counts = Counter(self.as_counts())
        for d, c in other.as_counts().items():
            if counts[d] < c:
                raise ProfileError(f"cannot remove {d}^{c} from {self}")
            counts[d] -= c
        return Profile.from_counts(counts)

    def render(self) -> str:
        terms = [f"{d}^{c}" for d, c in self.blocks]
        if self.isolated:
            terms.append(f"0^{self.isolated}")
        return " ".join(terms)

    def __str__(self) -> str:
        return self.render() or "()"


_TERM = re.compile(r"^(\d+)\^(\d+)$")
_INT = re.compile(r"^\d+$")


def parse_profile(text: str) -> Profile:
    """Parse ``"3^4 2^1"`` (compact) or ``"3,3,3,3,2"`` (raw, non-increasing)."""
    text = text.strip()
    if not text:
        raise ProfileError("empty profile")
    if "^" in text:
        counts: Counter[int] = Counter()
        for tok in text.replace(",", " ").split():
            m = _TERM.match(tok)
            if m is None:
                raise ProfileError(f"malformed term {tok!r}")
            d, c = int(m.group(1)), int(m.group(2))
            if c == 0:
                raise ProfileError(f"zero count in term {tok!r}")
            counts[d] += c
        return Profile.from_counts(counts)
    tokens = [t.strip() for t in text.split(",")]
    values = []
    for tok in tokens:
        if tok.startswith("-") and _INT.match(tok[1:]):
            raise ProfileError(f"negative entry {tok}")
        if not _INT.match(tok):
            raise ProfileError(f"malformed entry {tok!r}")
        values.append(int(tok))
    if any(a < b for a, b in zip(values, values[1:])):
        raise ProfileError("raw list must be non-increasing")
    return Profile.from_sequence(values)


def split_candidates(p: Profile) -> Iterator[tuple[Profile, Profile]]:
    """Yield every split ``p = rest + part`` with ``part`` a union of edges
    ``(1^{2a})`` or a star plus edges ``(d^d, 1^{2a+1})``.

    Order: empty part, then ``(1^{2a})`` by ascending ``a``, then stars by
    descending ``d`` (ascending ``a`` inside).
    """
    ones = p.count_of(1)
    yield p, Profile()
    for a in range(1, ones // 2 + 1):
        part = Profile(((1, 2 * a),))
        yield p - part, part
    for d, c in p.blocks:
        if d < 2 or c < d:
            continue
        for a in range((ones - 1) // 2 + 1 if ones else 0):
            part = Profile(((d, d), (1, 2 * a + 1)))
            yield p - part, part
