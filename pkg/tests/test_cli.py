import subprocess
import sys

import pytest

from vdwc.cli import main, random_tape
from vdwc.progressions import format_tape


@pytest.fixture
def tape_file(tmp_path):
    def make(symbols, name="s.txt"):
        path = tmp_path / name
        path.write_text(format_tape(symbols) + "\n")
        return str(path)

    return make


def test_compress_reports_stream_length(tape_file, tmp_path, capsys):
    src = tape_file(random_tape(100, 2, seed=1))
    out = str(tmp_path / "s.vdwc")
    assert main(["compress", "--k", "3", "--c", "2", "--n", "9", "--D", "1", "--in", src, "--out", out]) == 0
    assert "stream=115 predicted=115" in capsys.readouterr().out
    back = str(tmp_path / "back.txt")
    assert main(["decompress", "--in", out, "--out", back]) == 0
    assert (tmp_path / "back.txt").read_text() == (tmp_path / "s.txt").read_text()


def test_default_window_comes_from_oracle(tape_file, tmp_path, capsys):
    src = tape_file(random_tape(200, 2, seed=2))
    assert main(["compress", "--k", "4", "--D", "3", "--in", src, "--out", str(tmp_path / "a")]) == 0
    # n = w(4;2) = 35, C = ceil(log2(16 * 11)) = 8
    assert "stream=256 predicted=256" in capsys.readouterr().out


def test_off_grid_requires_n(tape_file, tmp_path):
    src = tape_file(random_tape(200, 2, seed=2))
    assert main(["compress", "--k", "5", "--D", "1", "--in", src, "--out", str(tmp_path / "a")]) == 7


def test_no_initial_progression_exit_1(tape_file, tmp_path, capsys):
    # prefix 0011001 + first symbol 1 gives the progression-free 00110011
    u = tape_file([0, 0, 1, 1, 0, 0, 1], name="u.txt")
    src = tape_file([1] + [0] * 20)
    argv = ["compress", "--k", "3", "--n", "8", "--D", "1", "--u", u, "--in", src, "--out", str(tmp_path / "a")]
    rc = main(argv)
    assert rc == 1
    assert "no initial progression" in capsys.readouterr().err


def test_tape_exhausted_exit_3(tape_file, tmp_path):
    src = tape_file([0] * 10)
    assert main(["compress", "--k", "3", "--D", "5", "--in", src, "--out", str(tmp_path / "a")]) == 3


def test_queue_exhausted_exit_2(tmp_path):
    u = tmp_path / "u.txt"
    assert main(["free-string", "--length", "20", "--k", "5", "--blocked", "--out", str(u)]) == 0
    n = len(u.read_text().strip()) + 1
    codes = set()
    for seed in range(40):
        codes.add(
            main(["roundtrip", "--k", "5", "--n", str(n), "--D", "20", "--u", str(u),
                  "--length", "300", "--seed", str(seed)])
        )
    assert codes <= {0, 2} and 2 in codes


def test_missing_input_exit_4(tmp_path):
    rc = main(["compress", "--k", "3", "--D", "1", "--in", str(tmp_path / "nope.txt"), "--out", str(tmp_path / "a")])
    assert rc == 4


def test_roundtrip_random_and_degenerate(capsys):
    assert main(["roundtrip", "--k", "3", "--c", "2", "--n", "9", "--D", "10", "--length", "10000", "--seed", "1"]) == 0
    assert main(["roundtrip", "--k", "3", "--D", "0", "--length", "50", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "stream=10069 predicted=10069" in out


def test_roundtrip_flipped_byte_is_corrupt(capsys):
    rc = main(["roundtrip", "--k", "3", "--D", "10", "--length", "2000", "--seed", "1", "--flip-byte", "100"])
    assert rc == 6
    assert "corrupt artifact" in capsys.readouterr().err


def test_roundtrip_requires_seed_for_random_tapes():
    assert main(["roundtrip", "--k", "3", "--D", "1", "--length", "50"]) == 7


def test_decompress_corrupt_file(tmp_path, tape_file):
    src = tape_file(random_tape(100, 2, seed=5))
    art = tmp_path / "s.vdwc"
    assert main(["compress", "--k", "3", "--D", "2", "--in", src, "--out", str(art)]) == 0
    data = bytearray(art.read_bytes())
    data[-6] ^= 0x40
    art.write_bytes(bytes(data))
    assert main(["decompress", "--in", str(art), "--out", str(tmp_path / "b.txt")]) == 6


def test_compress_once_round_trip(tape_file, tmp_path, capsys):
    src = tape_file([0] * 9)
    enc = str(tmp_path / "e.txt")
    assert main(["compress-once", "--k", "3", "--n", "9", "--in", src, "--out", enc]) == 0
    assert (tmp_path / "e.txt").read_text().strip() == "00000000000"
    dec = str(tmp_path / "d.txt")
    assert main(["compress-once", "--k", "3", "--n", "9", "--decode", "--in", enc, "--out", dec]) == 0
    assert (tmp_path / "d.txt").read_text().strip() == "000000000"


def test_bounds_table(capsys):
    assert main(["bounds", "--k-min", "3", "--k-max", "10"]) == 0
    out = capsys.readouterr().out
    assert "11.52" in out
    rows = {line.split()[0]: line.split() for line in out.splitlines()[1:]}
    assert rows["3"][-1] == "9" and rows["4"][-1] == "35"


def test_bounds_pairs_and_empty(capsys):
    assert main(["bounds", "--k-min", "4", "--k-max", "4", "--format", "pairs", "--D", "5"]) == 0
    assert "classical=4 " in capsys.readouterr().out
    assert main(["bounds", "--k-min", "5", "--k-max", "4"]) == 0
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("k,c,cap,expect", [(3, 2, 50, "w(3;2) = 9"), (3, 3, 50, "w(3;3) = 27"), (4, 2, 5, "w(4;2) > 5")])
def test_vdw(k, c, cap, expect, capsys):
    assert main(["vdw", "--k", str(k), "--c", str(c), "--cap", str(cap)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == expect


def test_free_string_and_verify(tmp_path, capsys):
    path = tmp_path / "f.txt"
    assert main(["free-string", "--length", "8", "--k", "3", "--out", str(path)]) == 0
    assert main(["verify", "--k", "3", "--in", str(path)]) == 0
    path.write_text("000\n")
    assert main(["verify", "--k", "3", "--in", str(path)]) == 8
    capsys.readouterr()
    assert main(["free-string", "--length", "9", "--k", "3"]) == 0
    assert capsys.readouterr().out.strip() == "none"


def test_usage_errors_have_their_own_code():
    with pytest.raises(SystemExit) as e:
        main(["compress", "--k", "3"])
    assert e.value.code == 7
    assert main(["compress", "--k", "2", "--n", "9", "--D", "1", "--in", "x", "--out", "y"]) == 7


def test_deterministic_output(tmp_path):
    outs = []
    for name in ("a", "b"):
        art = tmp_path / f"{name}.vdwc"
        src = tmp_path / f"{name}.txt"
        src.write_text(format_tape(random_tape(500, 3, seed=42)) + "\n")
        assert main(["compress", "--k", "3", "--c", "3", "--D", "15", "--in", str(src), "--out", str(art)]) == 0
        outs.append(art.read_bytes())
    assert outs[0] == outs[1]


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "vdwc", "vdw", "--k", "3", "--cap", "20"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("w(3;2) = 9")
