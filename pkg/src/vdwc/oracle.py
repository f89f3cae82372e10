"""Exhaustive ground truth for small van der Waerden numbers.

Colorings are grown one symbol at a time. Each color keeps a bitmask of the
positions it occupies, so whether the new symbol closes a monochromatic
progression is a handful of mask tests against the progressions ending at
the new position. Only canonical colorings are visited (a color may be used
for the first time only after all smaller colors), which loses nothing: the
lexicographically smallest member of any color-permutation class is
canonical, and permuting colors preserves progression-freeness.
"""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

# exact values the search below reproduces; used for CLI defaults
COMPUTABLE = {(3, 2), (3, 3), (4, 2)}


@dataclass(frozen=True)
class VdwResult:
    k: int
    c: int
    value: Optional[int]  # None when the cap was reached
    cap: int
    witness: tuple[int, ...]

    @property
    def exceeded_cap(self) -> bool:
        return self.value is None

    def __str__(self):
        if self.value is None:
            return f"w({self.k};{self.c}) > {self.cap}"
        return f"w({self.k};{self.c}) = {self.value}"


def verify_progression_free(t: Sequence[int], k: int) -> bool:
    n = len(t)
    for start in range(n):
        x = t[start]
        for gap in range(1, (n - 1 - start) // (k - 1) + 1):
            if all(t[start + j * gap] == x for j in range(1, k)):
                return False
    return True


class _ClosingMasks:
    """Masks of the k-1 earlier terms of every progression ending at a 0-based position.

    Built on demand, since deep searches with a loose cap never get near it.
    """

    def __init__(self, k: int):
        self.k = k
        self.rows: list[tuple[int, ...]] = []

    def __getitem__(self, p: int) -> tuple[int, ...]:
        rows, k = self.rows, self.k
        while len(rows) <= p:
            q = len(rows)
            ms = []
            for d in range(1, q // (k - 1) + 1):
                m = 0
                for j in range(1, k):
                    m |= 1 << (q - j * d)
                ms.append(m)
            rows.append(tuple(ms))
        return rows[p]


@lru_cache(maxsize=16)
def _closing_masks(k: int) -> _ClosingMasks:
    return _ClosingMasks(k)


def _closes(mask: int, ends: tuple[int, ...]) -> bool:
    for e in ends:
        if mask & e == e:
            return True
    return False


def _grow(k, c, cap, prefix, stop_at=None, need_blocked=False):
    """Depth-first search over canonical progression-free colorings.

    Returns ``(first, hit)``: ``first[L]`` is the lexicographically first
    coloring of length L met (with the given prefix), and ``hit`` is the first
    coloring that reached ``stop_at`` (and, with ``need_blocked``, admits no
    extension), after which the search stops.
    """
    ends = _closing_masks(k)
    masks = [0] * c
    s: list[int] = []
    top = -1
    for p, x in enumerate(prefix):
        if _closes(masks[x], ends[p]) or x > top + 1:
            return {}, None
        masks[x] |= 1 << p
        s.append(x)
        top = max(top, x)
    first: dict[int, tuple[int, ...]] = {}
    for L in range(len(s) + 1):
        first.setdefault(L, tuple(s[:L]))

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * cap + 100))

    def rec(p, top):
        if p not in first:
            first[p] = tuple(s)
        if stop_at is not None and p >= stop_at:
            if not need_blocked or all(_closes(masks[x], ends[p]) for x in range(c)):
                return tuple(s)
            if p >= cap:
                return None
        if p >= cap:
            return None
        e = ends[p]
        bit = 1 << p
        for x in range(min(c, top + 2)):
            m = masks[x]
            if _closes(m, e):
                continue
            masks[x] = m | bit
            s.append(x)
            got = rec(p + 1, top if x <= top else x)
            s.pop()
            masks[x] = m
            if got is not None:
                return got
        return None

    hit = rec(len(s), top)
    return first, hit


def find_progression_free(length: int, k: int, c: int) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest progression-free string of the given length, if any."""
    if length <= 0:
        return ()
    _, hit = _grow(k, c, length, (), stop_at=length)
    return hit


def find_blocked_free(min_length: int, k: int, c: int, cap: int = 2_000) -> Optional[tuple[int, ...]]:
    """First progression-free string of length >= min_length that no symbol can extend.

    Such a string works as a compressor prefix for a window one longer than
    itself: whatever symbol follows, a monochromatic progression ends there.
    """
    _, hit = _grow(k, c, cap, (), stop_at=min_length, need_blocked=True)
    return hit


def _canonical_prefixes(k, c, depth):
    out = []
    s = []

    def rec(top):
        if len(s) == depth:
            out.append(tuple(s))
            return
        for x in range(min(c, top + 2)):
            s.append(x)
            if verify_progression_free(s, k):
                rec(max(top, x))
            s.pop()

    rec(-1)
    return out


def _subtree(args):
    k, c, cap, prefix = args
    first, _ = _grow(k, c, cap, prefix, stop_at=cap)
    return first


def brute_force_vdw(k: int, c: int, cap: int, threads: int = 1) -> VdwResult:
    """Exact w(k;c) if it is at most ``cap``; otherwise a result flagged as exceeding it.

    With ``threads > 1`` the search tree is split on short prefixes that are
    handed to worker processes; the merge walks prefixes in lexicographic
    order, so the witness is the same as for a single-threaded run.
    """
    if k < 2 or c < 1 or cap < 1:
        raise ValueError("need k >= 2, c >= 1, cap >= 1")
    if threads <= 1:
        first, _ = _grow(k, c, cap, (), stop_at=cap)
    else:
        depth = min(cap, 6)
        prefixes = _canonical_prefixes(k, c, depth)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_subtree, [(k, c, cap, p) for p in prefixes]))
        first = {}
        for part in parts:
            for L, s in part.items():
                first.setdefault(L, s)
    longest = max(first)
    if longest >= cap:
        return VdwResult(k, c, None, cap, first[cap])
    return VdwResult(k, c, longest + 1, cap, first[longest])
