"""Command-line entry point.

Exit codes:
    0  success
    1  no initial progression (window below w(k;c) for this input)
    2  queue exhausted
    3  tape exhausted (input too short for D replacements)
    4  I/O error
    5  round-trip violated
    6  corrupt artifact (includes invalid codes and claim violations)
    7  invalid parameters
    8  verify: tape is not progression-free
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import artifact, bounds, oracle
from .compressor import compress, compress_once, decompress, decompress_once
from .errors import CorruptArtifact, VdwError
from .progressions import WindowParams, format_tape, parse_tape

EXIT_IO = 4
EXIT_ROUNDTRIP = 5
EXIT_USAGE = 7
EXIT_NOT_FREE = 8

VDW_CAP = 200


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def random_tape(length: int, c: int, seed: int) -> list[int]:
    """Uniform symbols from ``random.Random(seed)``; the experiments' only source of randomness."""
    rng = random.Random(seed)
    return [rng.randrange(c) for _ in range(length)]


def exact_w(k: int, c: int) -> int | None:
    if (k, c) not in oracle.COMPUTABLE:
        return None
    return oracle.brute_force_vdw(k, c, VDW_CAP).value


def _read_tape(path, c=None):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise OSError(f"cannot read {path}: {e.strerror}") from None
    try:
        return parse_tape(text, c)
    except ValueError as e:
        raise UsageError(f"{path}: {e}") from None


def _write(path, data):
    try:
        if isinstance(data, bytes):
            Path(path).write_bytes(data)
        else:
            Path(path).write_text(data)
    except OSError as e:
        raise OSError(f"cannot write {path}: {e.strerror}") from None


def _window(args) -> WindowParams:
    n = args.n
    if n is None:
        n = exact_w(args.k, args.c)
        if n is None:
            raise UsageError(f"w({args.k};{args.c}) is not on the exact grid; pass --n")
    try:
        return WindowParams(n, args.k, args.c)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _prefix(args, w: WindowParams) -> list[int]:
    if args.u is not None:
        u = _read_tape(args.u, w.c)
    else:
        found = oracle.find_progression_free(w.n - 1, w.k, w.c)
        if found is None:
            raise UsageError(f"no progression-free prefix of length {w.n - 1} exists; n exceeds w({w.k};{w.c})")
        u = list(found)
    if len(u) != w.n - 1 or not oracle.verify_progression_free(u, w.k):
        raise UsageError(f"prefix must be a progression-free tape of length {w.n - 1}")
    return u


def _input_tape(args, c):
    if args.input is not None:
        return _read_tape(args.input, c)
    if args.length is None or args.seed is None:
        raise UsageError("give --in, or --length together with --seed")
    return random_tape(args.length, c, args.seed)


def cmd_compress(args) -> int:
    w = _window(args)
    u = _prefix(args, w)
    s = _read_tape(args.input, w.c)
    a = compress(s, w, args.D, u, check_claim=args.debug_claim_check)
    _write(args.out, artifact.to_bytes(a))
    predicted = bounds.predicted_output_length(len(s), w.k, w.c, w.n, args.D)
    print(f"stream={len(a.stream)} predicted={predicted}")
    return 0


def cmd_decompress(args) -> int:
    try:
        data = Path(args.input).read_bytes()
    except OSError as e:
        raise OSError(f"cannot read {args.input}: {e.strerror}") from None
    a = artifact.from_bytes(data)
    u = _read_tape(args.u, a.c) if args.u is not None else None
    s = decompress(a, u, verify=True)
    _write(args.out, format_tape(s) + "\n")
    return 0


def cmd_roundtrip(args) -> int:
    w = _window(args)
    u = _prefix(args, w)
    s = _input_tape(args, w.c)
    a = compress(s, w, args.D, u, check_claim=args.debug_claim_check)
    data = bytearray(artifact.to_bytes(a))
    if args.flip_byte is not None:
        if not 0 <= args.flip_byte < len(data):
            raise UsageError(f"--flip-byte must be below {len(data)}")
        data[args.flip_byte] ^= 0xFF
    back = decompress(artifact.from_bytes(bytes(data)), u, verify=True)
    if back != s:
        print("round-trip violated", file=sys.stderr)
        return EXIT_ROUNDTRIP
    predicted = bounds.predicted_output_length(len(s), w.k, w.c, w.n, args.D)
    print(f"ok length={len(s)} stream={len(a.stream)} predicted={predicted} bytes={len(data)}")
    return 0


def cmd_compress_once(args) -> int:
    w = _window(args)
    s = _read_tape(args.input, w.c)
    out = decompress_once(s, w) if args.decode else compress_once(s, w)
    _write(args.out, format_tape(out) + "\n")
    print(f"in={len(s)} out={len(out)}")
    return 0


def cmd_bounds(args) -> int:
    reports = []
    for k in range(args.k_min, args.k_max + 1):
        for c in range(args.c_min, args.c_max + 1):
            w = exact_w(k, c)
            reports.append(bounds.bound_report(k, c, exact_w=w, Ds=args.D or ()))
    text = bounds.format_pairs(reports) if args.format == "pairs" else bounds.format_table(reports)
    if text:
        print(text)
    return 0


def cmd_vdw(args) -> int:
    res = oracle.brute_force_vdw(args.k, args.c, args.cap, threads=args.threads)
    print(res)
    value = "none" if res.exceeded_cap else res.value
    print(f"k={res.k} c={res.c} cap={res.cap} value={value} witness={format_tape(res.witness)}")
    return 0


def cmd_free_string(args) -> int:
    if args.blocked:
        found = oracle.find_blocked_free(args.length, args.k, args.c)
    else:
        found = oracle.find_progression_free(args.length, args.k, args.c)
    if found is None:
        print("none")
        return 0
    text = format_tape(found)
    if args.out:
        _write(args.out, text + "\n")
    print(text)
    return 0


def cmd_verify(args) -> int:
    t = _read_tape(args.input)
    ok = oracle.verify_progression_free(t, args.k)
    print(f"length={len(t)} progression_free={str(ok).lower()}")
    return 0 if ok else EXIT_NOT_FREE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vdwc", description="Progression-replacement compressor and van der Waerden tools.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def window_flags(sp, need_D=True):
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--c", type=int, default=2)
        sp.add_argument("--n", type=int, help="window length (default: exact w(k;c) when known)")
        if need_D:
            sp.add_argument("--D", type=int, required=True, help="number of replacements")
            sp.add_argument("--u", help="progression-free prefix tape of length n-1")
            sp.add_argument("--debug-claim-check", action="store_true")

    sp = sub.add_parser("compress")
    window_flags(sp)
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_compress)

    sp = sub.add_parser("decompress")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--u")
    sp.set_defaults(func=cmd_decompress)

    sp = sub.add_parser("roundtrip")
    window_flags(sp)
    sp.add_argument("--in", dest="input")
    sp.add_argument("--length", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--flip-byte", type=int, help="invert one artifact byte before decoding")
    sp.set_defaults(func=cmd_roundtrip)

    sp = sub.add_parser("compress-once")
    window_flags(sp, need_D=False)
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--decode", action="store_true")
    sp.set_defaults(func=cmd_compress_once)

    sp = sub.add_parser("bounds")
    sp.add_argument("--k-min", type=int, default=3)
    sp.add_argument("--k-max", type=int, default=6)
    sp.add_argument("--c-min", type=int, default=2)
    sp.add_argument("--c-max", type=int, default=2)
    sp.add_argument("--D", type=int, action="append", help="evaluate the inequalities at this D (repeatable)")
    sp.add_argument("--format", choices=["table", "pairs"], default="table")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("vdw")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--c", type=int, default=2)
    sp.add_argument("--cap", type=int, default=VDW_CAP)
    sp.add_argument("--threads", type=int, default=1)
    sp.set_defaults(func=cmd_vdw)

    sp = sub.add_parser("free-string")
    sp.add_argument("--length", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--c", type=int, default=2)
    sp.add_argument("--blocked", action="store_true", help="first string of at least this length that cannot be extended")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_free_string)

    sp = sub.add_parser("verify")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--in", dest="input", required=True)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VdwError as e:
        print(f"error: {_label(e)}: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: I/O: {e}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, ValueError) as e:
        print(f"error: invalid parameters: {e}", file=sys.stderr)
        return EXIT_USAGE


def _label(e: VdwError) -> str:
    if isinstance(e, CorruptArtifact):
        return "corrupt artifact"
    return {
        "NoInitialProgression": "no initial progression",
        "QueueExhausted": "queue exhausted",
        "TapeExhausted": "tape exhausted",
        "ClaimViolated": "claim violated",
    }.get(type(e).__name__, "error")


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
