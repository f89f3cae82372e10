"""Repeated progression-replacement compressor and its inverse.

The compressor runs on ``u + s`` where ``u`` is a progression-free prefix of
length ``n - 1``. A FIFO queue starts with the smallest monochromatic
progression in the window. Each step looks for the smallest monochromatic
progression meeting the queue front: if there is one it is written relative
to the front, enqueued, and replaced with symbols pulled off the end of the
tape; otherwise the front is dropped. The stream layout is

    replacement:  1, <code: C symbols>, <color>
    dequeue:      0

followed by one trailing 0 per progression still queued and then the
residual tape. Its length depends only on ``len(s)``, ``n``, ``k``, ``c`` and
``D``.

The single-shot scheme (``compress_once``) removes just one monochromatic
progression and writes its rank among all progressions of the window.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .errors import (
    ClaimViolated,
    CorruptArtifact,
    NoInitialProgression,
    QueueExhausted,
    TapeExhausted,
)
from .oracle import verify_progression_free
from .progressions import (
    Progression,
    WindowParams,
    check_tape,
    intersects,
    smallest_monochromatic,
    smallest_monochromatic_intersecting,
    window_index,
)
from .relcode import (
    ceil_log,
    code_to_symbols,
    code_width,
    decode_relative,
    encode_relative,
    symbols_to_code,
)

REPLACE_MARK = 1
DEQUEUE_MARK = 0


@dataclass(frozen=True)
class Replace:
    code: int
    color: int


@dataclass(frozen=True)
class Dequeue:
    pass


Event = Union[Replace, Dequeue]


@dataclass
class CompressedArtifact:
    k: int
    c: int
    n: int
    D: int
    original_length: int
    ap0_start: int
    ap0_gap: int
    stream: list[int] = field(repr=False)

    @property
    def window(self) -> WindowParams:
        return WindowParams(self.n, self.k, self.c)

    @property
    def ap0(self) -> Progression:
        return Progression(self.ap0_start, self.ap0_gap, self.k)


@dataclass
class ForwardPass:
    """What the decoder learns from reading the event section left to right."""

    events: list[Event]
    replaced: list[tuple[Progression, int]]
    residual: list[int]


def expected_stream_length(original_length: int, w: WindowParams, D: int) -> int:
    return original_length + (w.n - 1) + D * (code_width(w) + 3) + 1 - D * w.k


def replace_progression(t: Sequence[int], p: Progression, n: Optional[int] = None) -> list[int]:
    """Overwrite p's positions with the last k symbols of t and drop those k symbols.

    Term m of p (counting from 0) receives the symbol at position len(t) - m.
    With ``n`` given, p must lie in 1..n and every source must lie beyond n.
    """
    k = p.length
    bound = p.last if n is None else n
    if n is not None and p.last > n:
        raise ValueError(f"{p} is not within window {n}")
    if len(t) - k < bound:
        raise TapeExhausted(f"tape of length {len(t)} cannot supply {k} symbols beyond position {bound}")
    L = len(t)
    out = list(t[: L - k])
    for m, pos in enumerate(p.positions()):
        out[pos - 1] = t[L - m - 1]
    return out


def undo_replacement(
    t: Sequence[int], p: Progression, color: int, original_length: int
) -> list[int]:
    k = p.length
    L = original_length
    if len(t) != L - k:
        raise CorruptArtifact(f"tape length {len(t)} does not match {L} - {k}")
    if p.last > len(t):
        raise CorruptArtifact(f"{p} does not fit a tape of length {len(t)}")
    out = list(t) + [0] * k
    for m, pos in enumerate(p.positions()):
        out[L - m - 1] = t[pos - 1]
        out[pos - 1] = color
    return out


def claim_violations(
    tape: Sequence[int], queue: Sequence[Progression], w: WindowParams
) -> list[Progression]:
    """Monochromatic progressions in the window that meet no queued progression."""
    covered = set()
    for q in queue:
        covered.update(q.positions())
    idx = window_index(w.n, w.k)
    bad = []
    for i, cells in enumerate(idx.cells):
        if idx.is_mono(tape, i) and not any(j + 1 in covered for j in cells):
            bad.append(idx.aps[i])
    return bad


def _check_claim(tape, queue, w, step):
    bad = claim_violations(tape, queue, w)
    if bad:
        raise ClaimViolated(f"after step {step}: {bad[0]} meets no queued progression")


def compress(
    s: Sequence[int],
    w: WindowParams,
    D: int,
    u: Sequence[int],
    check_claim: bool = False,
) -> CompressedArtifact:
    """Run the repeated replacement compressor on ``u + s``.

    ``u`` must be progression-free with length ``n - 1``, and ``s`` must be
    longer than ``(D + 1) * k`` so every replacement draws its symbols from
    beyond the window. With ``check_claim`` the window is rescanned after
    every step and :class:`ClaimViolated` is raised if a monochromatic
    progression meets nothing in the queue.
    """
    n, k = w.n, w.k
    if D < 0:
        raise ValueError("D must be non-negative")
    check_tape(s, w.c)
    check_tape(u, w.c)
    if len(u) != n - 1:
        raise ValueError(f"prefix u has length {len(u)}, expected {n - 1}")
    if not verify_progression_free(u, k):
        raise ValueError("prefix u contains a monochromatic progression")
    if len(s) <= (D + 1) * k:
        raise TapeExhausted(f"input of length {len(s)} is too short for {D} replacements (need > {(D + 1) * k})")

    tape = list(u) + list(s)
    ap0 = smallest_monochromatic(tape, w)
    if ap0 is None:
        raise NoInitialProgression(f"no monochromatic {k}-term progression among the first {n} symbols")
    assert n in ap0

    queue = deque([ap0])
    stream: list[int] = []
    deletions = 0
    step = 0
    if check_claim:
        _check_claim(tape, queue, w, step)
    while deletions < D:
        if not queue:
            raise QueueExhausted(f"queue emptied after {deletions} of {D} replacements", tape[:n])
        front = queue[0]
        p = smallest_monochromatic_intersecting(tape, front, w)
        if p is not None:
            color = tape[p.start - 1]
            code = encode_relative(front, p, w)
            stream.append(REPLACE_MARK)
            stream.extend(code_to_symbols(code, w))
            stream.append(color)
            queue.append(p)
            tape = replace_progression(tape, p, n)
            deletions += 1
        else:
            queue.popleft()
            stream.append(DEQUEUE_MARK)
        step += 1
        if check_claim:
            _check_claim(tape, queue, w, step)

    stream.extend([DEQUEUE_MARK] * len(queue))
    stream.extend(tape)
    assert len(stream) == expected_stream_length(len(s), w, D)
    return CompressedArtifact(k, w.c, n, D, len(s), ap0.start, ap0.gap, stream)


def read_events(a: CompressedArtifact) -> ForwardPass:
    """Parse the event section while replaying the queue."""
    w = _artifact_window(a)
    width = code_width(w)
    stream = a.stream
    if len(stream) != expected_stream_length(a.original_length, w, a.D):
        raise CorruptArtifact(
            f"stream has {len(stream)} symbols, expected {expected_stream_length(a.original_length, w, a.D)}"
        )
    try:
        ap0 = a.ap0
    except ValueError as e:
        raise CorruptArtifact(str(e)) from None
    if ap0.last > w.n or w.n not in ap0:
        raise CorruptArtifact(f"initial progression {ap0} does not end the prefix at position {w.n}")

    queue = deque([ap0])
    events: list[Event] = []
    replaced: list[tuple[Progression, int]] = []
    pos = 0
    end = len(stream)
    while len(replaced) < a.D:
        if not queue:
            raise CorruptArtifact("queue emptied before all replacements were read")
        if pos >= end:
            raise CorruptArtifact("stream ended inside the event section")
        mark = stream[pos]
        pos += 1
        if mark == REPLACE_MARK:
            if pos + width + 1 > end:
                raise CorruptArtifact("stream ended inside a replacement record")
            code = symbols_to_code(stream[pos : pos + width], w)
            color = stream[pos + width]
            pos += width + 1
            if not 0 <= color < w.c:
                raise CorruptArtifact(f"color {color} outside alphabet")
            p = decode_relative(queue[0], code, w)
            if not intersects(p, queue[0]):
                raise ClaimViolated(f"decoded {p} does not meet front {queue[0]}")
            events.append(Replace(code, color))
            replaced.append((p, color))
            queue.append(p)
        elif mark == DEQUEUE_MARK:
            events.append(Dequeue())
            queue.popleft()
        else:
            raise CorruptArtifact(f"bad event marker {mark}")
    for _ in range(len(queue)):
        if pos >= end or stream[pos] != DEQUEUE_MARK:
            raise CorruptArtifact("missing trailing dequeue marker")
        events.append(Dequeue())
        pos += 1
    residual = list(stream[pos:])
    if any(not 0 <= x < w.c for x in residual):
        raise CorruptArtifact("residual tape holds symbols outside the alphabet")
    if len(residual) != a.original_length + w.n - 1 - a.D * w.k:
        raise CorruptArtifact("residual tape has the wrong length")
    return ForwardPass(events, replaced, residual)


def _artifact_window(a: CompressedArtifact) -> WindowParams:
    try:
        w = WindowParams(a.n, a.k, a.c)
    except ValueError as e:
        raise CorruptArtifact(str(e)) from None
    if a.D < 0 or a.original_length <= (a.D + 1) * a.k:
        raise CorruptArtifact("header lengths are inconsistent")
    return w


def decompress(
    a: CompressedArtifact, u: Optional[Sequence[int]] = None, verify: bool = False
) -> list[int]:
    """Invert :func:`compress`.

    The forward pass recovers every replaced progression and its color; the
    backward pass undoes the replacements newest first, then the first
    ``n - 1`` symbols are stripped. If ``u`` is given the stripped prefix
    must equal it. ``verify`` recompresses the result and demands an
    identical stream, which rejects any stream compress could not have made.
    """
    fwd = read_events(a)
    n, k = a.n, a.k
    tape = fwd.residual
    for j in range(a.D - 1, -1, -1):
        p, color = fwd.replaced[j]
        tape = undo_replacement(tape, p, color, n - 1 + a.original_length - j * k)
    prefix, s = tape[: n - 1], tape[n - 1 :]
    if u is not None and list(u) != prefix:
        raise CorruptArtifact("reconstructed prefix differs from the supplied u")
    if verify:
        try:
            again = compress(s, a.window, a.D, prefix)
        except (ValueError, NoInitialProgression, QueueExhausted, TapeExhausted) as e:
            raise CorruptArtifact(f"decoded tape does not recompress: {e}") from None
        if again.stream != list(a.stream) or (again.ap0_start, again.ap0_gap) != (a.ap0_start, a.ap0_gap):
            raise CorruptArtifact("decoded tape recompresses to a different artifact")
    return s


# single-shot scheme


def compress_once(s: Sequence[int], w: WindowParams) -> list[int]:
    """Delete the first monochromatic progression and prefix its rank and color."""
    check_tape(s, w.c)
    if len(s) < w.n:
        raise ValueError(f"tape of length {len(s)} is shorter than the window {w.n}")
    idx = window_index(w.n, w.k)
    p = smallest_monochromatic(s, w)
    if p is None:
        raise NoInitialProgression(f"no monochromatic {w.k}-term progression among the first {w.n} symbols")
    rank = idx.index[p]
    width = ceil_log(len(idx.aps), w.c)
    digits = [0] * width
    for i in range(width - 1, -1, -1):
        rank, digits[i] = divmod(rank, w.c)
    drop = set(p.positions())
    rest = [x for pos, x in enumerate(s, 1) if pos not in drop]
    return digits + [s[p.start - 1]] + rest


def decompress_once(s: Sequence[int], w: WindowParams) -> list[int]:
    idx = window_index(w.n, w.k)
    width = ceil_log(len(idx.aps), w.c)
    if len(s) < width + 1 + w.n - w.k:
        raise CorruptArtifact("input too short for a single-shot encoding")
    rank = symbols_to_code(s[:width], w)
    if rank >= len(idx.aps):
        raise CorruptArtifact(f"rank {rank} exceeds the {len(idx.aps)} progressions of the window")
    color = s[width]
    if not 0 <= color < w.c:
        raise CorruptArtifact(f"color {color} outside alphabet")
    p = idx.aps[rank]
    rest = iter(s[width + 1 :])
    out = [color if pos in p else next(rest) for pos in range(1, len(s) - width - 1 + w.k + 1)]
    check_tape(out, w.c)
    if smallest_monochromatic(out, w) != p:
        raise CorruptArtifact("rank does not name the first monochromatic progression")
    return out


def stream_markers(a: CompressedArtifact) -> tuple[int, int]:
    """Number of replacement and dequeue markers in the event section."""
    events = read_events(a).events
    ones = sum(isinstance(e, Replace) for e in events)
    return ones, len(events) - ones

