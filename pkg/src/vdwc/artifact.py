"""Binary container for compressed artifacts.

Layout, all integers big-endian::

    magic "VDWC" | version u8 | k u16 | c u8 | n u32 | D u32
    | original_length u64 | ap0_start u32 | ap0_gap u32
    | symbol stream, ceil(log2 c) bits per symbol, MSB first, zero padded
    | crc32 u32 over everything before it

The trailing CRC is what turns a flipped byte into an error; without it a
damaged residual tape would still decode, just to a different tape.
"""

from __future__ import annotations

import struct
import zlib

from .compressor import CompressedArtifact, expected_stream_length
from .errors import CorruptArtifact
from .progressions import WindowParams

MAGIC = b"VDWC"
VERSION = 1
HEADER = struct.Struct(">4sBHBIIQII")
CRC = struct.Struct(">I")


def symbol_bits(c: int) -> int:
    return max(1, (c - 1).bit_length())


def pack_symbols(symbols, bits: int) -> bytes:
    total = len(symbols) * bits
    pad = -total % 8
    text = "".join(format(x, f"0{bits}b") for x in symbols) + "0" * pad
    return int(text or "0", 2).to_bytes((total + pad) // 8, "big")


def unpack_symbols(data: bytes, count: int, bits: int) -> list[int]:
    total = count * bits
    if len(data) * 8 < total:
        raise CorruptArtifact("symbol section is truncated")
    acc = int.from_bytes(data, "big")
    pad = len(data) * 8 - total
    if acc & ((1 << pad) - 1):
        raise CorruptArtifact("nonzero padding bits")
    text = format(acc, f"0{len(data) * 8}b")
    return [int(text[i : i + bits], 2) for i in range(0, total, bits)]


def to_bytes(a: CompressedArtifact) -> bytes:
    head = HEADER.pack(
        MAGIC, VERSION, a.k, a.c, a.n, a.D, a.original_length, a.ap0_start, a.ap0_gap
    )
    body = head + pack_symbols(a.stream, symbol_bits(a.c))
    return body + CRC.pack(zlib.crc32(body))


def from_bytes(data: bytes) -> CompressedArtifact:
    if len(data) < HEADER.size + CRC.size:
        raise CorruptArtifact("artifact is shorter than its header")
    body, (crc,) = data[:-CRC.size], CRC.unpack(data[-CRC.size:])
    if zlib.crc32(body) != crc:
        raise CorruptArtifact("checksum mismatch")
    magic, version, k, c, n, D, length, ap0_start, ap0_gap = HEADER.unpack_from(body)
    if magic != MAGIC:
        raise CorruptArtifact("bad magic")
    if version != VERSION:
        raise CorruptArtifact(f"unsupported version {version}")
    try:
        w = WindowParams(n, k, c)
    except ValueError as e:
        raise CorruptArtifact(str(e)) from None
    count = expected_stream_length(length, w, D)
    bits = symbol_bits(c)
    payload = body[HEADER.size:]
    if count < 0 or len(payload) != (count * bits + 7) // 8:
        raise CorruptArtifact("symbol section has the wrong size")
    stream = unpack_symbols(payload, count, bits)
    if any(x >= c for x in stream):
        raise CorruptArtifact("symbol outside alphabet")
    return CompressedArtifact(k, c, n, D, length, ap0_start, ap0_gap, stream)
