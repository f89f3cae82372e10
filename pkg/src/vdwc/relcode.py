"""Relative encoding of one progression with respect to an intersecting one.

A target progression that meets a reference progression is pinned down by
three numbers: the term ``i`` of the reference where they meet, the term
``j`` of the target sitting there, and the target's gap ``d``. These are
packed mixed-radix into a single integer

    value = ((i - 1) * k + (j - 1)) * max_gap + (d - 1)

so every code is below ``k * k * max_gap`` with ``max_gap = (n - 1) // (k - 1)``.
"""

from __future__ import annotations

from typing import Sequence

from .errors import CorruptArtifact, InvalidCode
from .progressions import Progression, WindowParams


def code_space(w: WindowParams) -> int:
    return w.k * w.k * w.max_gap


def ceil_log(x: int, base: int) -> int:
    """Smallest e >= 0 with base**e >= x, in exact integer arithmetic."""
    e, p = 0, 1
    while p < x:
        p *= base
        e += 1
    return e


def code_width(w: WindowParams) -> int:
    """Number of base-c symbols used to write one relative code."""
    return ceil_log(code_space(w), w.c)


def meeting_terms(reference: Progression, target: Progression) -> tuple[int, int] | None:
    """Lexicographically smallest (i, j) with reference.term(i) == target.term(j)."""
    for i, pos in enumerate(reference.positions(), 1):
        if pos in target:
            return i, (pos - target.start) // target.gap + 1
    return None


def encode_relative(reference: Progression, target: Progression, w: WindowParams) -> int:
    for p in (reference, target):
        if p.length != w.k or p.last > w.n:
            raise ValueError(f"{p} is not a {w.k}-term progression within window {w.n}")
    terms = meeting_terms(reference, target)
    if terms is None:
        raise ValueError(f"{target} does not intersect {reference}")
    i, j = terms
    return ((i - 1) * w.k + (j - 1)) * w.max_gap + (target.gap - 1)


def decode_relative(reference: Progression, value: int, w: WindowParams) -> Progression:
    if not 0 <= value < code_space(w):
        raise InvalidCode(f"relative code {value} outside [0, {code_space(w)})")
    rest, d0 = divmod(value, w.max_gap)
    i0, j0 = divmod(rest, w.k)
    gap = d0 + 1
    start = reference.term(i0 + 1) - j0 * gap
    last = start + (w.k - 1) * gap
    if start < 1 or last > w.n:
        raise InvalidCode(f"relative code {value} points outside the window")
    return Progression(start, gap, w.k)


def code_to_symbols(value: int, w: WindowParams) -> list[int]:
    """Fixed-width base-c digits, most significant first."""
    width = code_width(w)
    out = [0] * width
    for pos in range(width - 1, -1, -1):
        value, out[pos] = divmod(value, w.c)
    if value:
        raise ValueError("code does not fit in its width")
    return out


def symbols_to_code(digits: Sequence[int], w: WindowParams) -> int:
    value = 0
    for x in digits:
        if not 0 <= x < w.c:
            raise CorruptArtifact(f"symbol {x} outside alphabet")
        value = value * w.c + x
    return value
