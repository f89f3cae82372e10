"""Arithmetic progressions inside a window of ``n`` positions.

Positions and term indices are 1-based. Progressions are ordered by
``(start, gap)``; that ordering is what "smallest" means everywhere in the
package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True, order=True)
class Progression:
    start: int
    gap: int
    length: int

    def __post_init__(self):
        if self.start < 1 or self.gap < 1:
            raise ValueError(f"invalid progression start={self.start} gap={self.gap}")
        if self.length < 1:
            raise ValueError(f"invalid progression length {self.length}")

    @classmethod
    def within(cls, start: int, gap: int, length: int, n: int) -> "Progression":
        """Build a progression and check that it fits in positions 1..n."""
        p = cls(start, gap, length)
        if p.last > n:
            raise ValueError(f"{p} does not fit in a window of {n}")
        return p

    @property
    def last(self) -> int:
        return self.start + (self.length - 1) * self.gap

    def term(self, i: int) -> int:
        """Position of the i-th term (1-based)."""
        if not 1 <= i <= self.length:
            raise IndexError(i)
        return self.start + (i - 1) * self.gap

    def positions(self) -> range:
        return range(self.start, self.last + 1, self.gap)

    def __contains__(self, pos: int) -> bool:
        return self.start <= pos <= self.last and (pos - self.start) % self.gap == 0

    def __str__(self):
        return "{" + ",".join(map(str, self.positions())) + "}"


@dataclass(frozen=True)
class WindowParams:
    """Window length ``n``, progression length ``k`` and alphabet size ``c``."""

    n: int
    k: int
    c: int

    def __post_init__(self):
        if self.k < 3:
            raise ValueError(f"k must be at least 3, got {self.k}")
        if self.c < 2:
            raise ValueError(f"c must be at least 2, got {self.c}")
        if self.n < self.k:
            raise ValueError(f"n={self.n} is smaller than k={self.k}")

    @property
    def max_gap(self) -> int:
        return (self.n - 1) // (self.k - 1)


def check_tape(symbols: Sequence[int], c: int) -> None:
    for pos, x in enumerate(symbols, 1):
        if not 0 <= x < c:
            raise ValueError(f"symbol {x} at position {pos} is outside alphabet of size {c}")


def parse_tape(text: str, c: Optional[int] = None) -> list[int]:
    """Parse the one-line digit format. Surrounding whitespace is ignored."""
    line = text.strip()
    if not all("0" <= ch <= "9" for ch in line):
        raise ValueError("tape text must consist of ASCII digits only")
    symbols = [ord(ch) - 48 for ch in line]
    if c is not None:
        if c > 10:
            raise ValueError("the text tape format supports at most 10 colors")
        check_tape(symbols, c)
    return symbols


def format_tape(symbols: Iterable[int]) -> str:
    out = []
    for x in symbols:
        if not 0 <= x <= 9:
            raise ValueError(f"symbol {x} cannot be written in the text tape format")
        out.append(chr(48 + x))
    return "".join(out)


def count_aps(n: int, k: int) -> int:
    """Closed-form number of k-term progressions in 1..n."""
    if n < k:
        return 0
    return sum(n - (k - 1) * d for d in range(1, (n - 1) // (k - 1) + 1))


def enumerate_aps(w: WindowParams) -> list[Progression]:
    return list(_aps(w.n, w.k))


@lru_cache(maxsize=64)
def _aps(n: int, k: int) -> tuple[Progression, ...]:
    out = []
    for start in range(1, n + 1):
        for gap in range(1, (n - start) // (k - 1) + 1):
            out.append(Progression(start, gap, k))
    return tuple(out)


def intersects(p: Progression, q: Progression) -> bool:
    # walk the shorter one and test membership in the other in O(1)
    if p.length > q.length:
        p, q = q, p
    return any(pos in q for pos in p.positions())


def intersecting_aps(p: Progression, w: WindowParams) -> list[Progression]:
    if p.last > w.n or p.length != w.k:
        raise ValueError(f"{p} is not a {w.k}-term progression within window {w.n}")
    idx = window_index(w.n, w.k)
    return [idx.aps[i] for i in idx.meeting(idx.index[p])]


def monochromatic_color(t: Sequence[int], p: Progression) -> Optional[int]:
    if p.last > len(t):
        raise ValueError(f"{p} reaches past the end of a tape of length {len(t)}")
    first = t[p.start - 1]
    for pos in range(p.start + p.gap, p.last + 1, p.gap):
        if t[pos - 1] != first:
            return None
    return first


class _WindowIndex:
    """Precomputed progression table and intersection lists for one window."""

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        self.aps = _aps(n, k)
        self.index = {p: i for i, p in enumerate(self.aps)}
        # 0-based position tuples, used by the hot loops
        self.cells = [tuple(pos - 1 for pos in p.positions()) for p in self.aps]
        by_pos: list[list[int]] = [[] for _ in range(n + 1)]
        for i, p in enumerate(self.aps):
            for pos in p.positions():
                by_pos[pos].append(i)
        self._by_pos = by_pos
        self._meeting: dict[int, tuple[int, ...]] = {}
        self._through: list[int] | None = None

    def meeting(self, i: int) -> tuple[int, ...]:
        """Sorted indices of all progressions sharing a position with progression i."""
        hit = self._meeting.get(i)
        if hit is None:
            s: set[int] = set()
            for pos in self.aps[i].positions():
                s.update(self._by_pos[pos])
            hit = self._meeting[i] = tuple(sorted(s))
        return hit

    def meeting_count(self, i: int) -> int:
        """len(meeting(i)) via per-position bitmasks over progression indices."""
        if self._through is None:
            self._through = [sum(1 << j for j in ids) for ids in self._by_pos]
        m = 0
        for pos in self.aps[i].positions():
            m |= self._through[pos]
        return m.bit_count()

    def is_mono(self, t: Sequence[int], i: int) -> bool:
        cells = self.cells[i]
        x = t[cells[0]]
        for j in cells[1:]:
            if t[j] != x:
                return False
        return True


@lru_cache(maxsize=32)
def window_index(n: int, k: int) -> _WindowIndex:
    return _WindowIndex(n, k)


def smallest_monochromatic(t: Sequence[int], w: WindowParams) -> Optional[Progression]:
    """Smallest monochromatic progression in the first n positions of t."""
    idx = window_index(w.n, w.k)
    for i in range(len(idx.aps)):
        if idx.is_mono(t, i):
            return idx.aps[i]
    return None


def smallest_monochromatic_intersecting(
    t: Sequence[int], front: Progression, w: WindowParams
) -> Optional[Progression]:
    if front.last > w.n or front.length != w.k:
        raise ValueError(f"{front} is not a {w.k}-term progression within window {w.n}")
    idx = window_index(w.n, w.k)
    for i in idx.meeting(idx.index[front]):
        if idx.is_mono(t, i):
            return idx.aps[i]
    return None
