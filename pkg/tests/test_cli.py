"""Command-line behavior: reproducible output, binary formats, exit codes."""

import struct
import subprocess
import sys

import pytest

from randstream import cli, jumps, state_io


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_text_is_reproducible(capsys):
    args = ("gen", "--engine", "pcg64", "--seed", "42", "-n", "5")
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0
    code, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    ref = state_io.create("pcg64", seed=[42]).fill("u01", {}, 5)
    assert [float(line) for line in out1.splitlines()] == ref


def test_gen_seed_accepts_hex(capsys):
    a = run_cli(capsys, "gen", "--engine", "sfc64", "--seed", "0x2A", "-n", "3")
    b = run_cli(capsys, "gen", "--engine", "sfc64", "--seed", "42", "-n", "3")
    assert a == b


def test_gen_f64le_file(tmp_path, capsys):
    out = tmp_path / "draws.bin"
    code, _, _ = run_cli(
        capsys, "gen", "--engine", "x256++", "--seed", "7", "--dist", "norm",
        "-n", "64", "--format", "f64le", "-o", str(out),
    )
    assert code == 0
    data = out.read_bytes()
    assert len(data) == 64 * 8
    ref = state_io.create("x256++", seed=[7]).fill("norm", {}, 64)
    assert list(struct.unpack("<64d", data)) == ref


def test_gen_f32le_file(tmp_path, capsys):
    out = tmp_path / "draws32.bin"
    code, _, _ = run_cli(
        capsys, "gen", "--engine", "x256++", "--seed", "7", "--dist", "u01f",
        "-n", "10", "--format", "f32le", "-o", str(out),
    )
    assert code == 0
    data = out.read_bytes()
    assert len(data) == 10 * 4
    ref = state_io.create("x256++", seed=[7]).fill("u01f", {}, 10)
    assert list(struct.unpack("<10f", data)) == ref


def test_gen_u64le_needs_integer_dist(tmp_path, capsys):
    out = tmp_path / "words.bin"
    code, _, _ = run_cli(
        capsys, "gen", "--engine", "sfc64", "--seed", "3", "--dist", "uint64",
        "-n", "9", "--format", "u64le", "-o", str(out),
    )
    assert code == 0
    ref = state_io.create("sfc64", seed=[3]).fill("uint64", {}, 9)
    assert list(struct.unpack("<9Q", out.read_bytes())) == ref

    code, _, err = run_cli(
        capsys, "gen", "--seed", "3", "--dist", "norm", "--format", "u64le",
    )
    assert code == 2
    assert "integer distribution" in err


def test_gen_perm_prints_one_line(capsys):
    code, out, _ = run_cli(
        capsys, "gen", "--engine", "pcg64", "--seed", "1", "--dist", "perm",
        "--params", "n=8",
    )
    assert code == 0
    got = [int(tok) for tok in out.split()]
    assert sorted(got) == list(range(8))
    assert got == state_io.create("pcg64", seed=[1]).permutation(8)


def test_gen_bad_parameter_value_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "gen", "--seed", "1", "--dist", "gamma", "--params", "alpha=-1",
    )
    assert code == 2
    assert "gamma shape must be > 0" in err


def test_gen_malformed_params_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "gen", "--seed", "1", "--dist", "gamma", "--params", "alpha:2",
    )
    assert code == 2
    assert "not name=value" in err


def test_gen_unknown_engine_exits_2(capsys):
    code, _, err = run_cli(capsys, "gen", "--engine", "mt19937", "--seed", "1")
    assert code == 2
    assert "unknown engine" in err


def test_gen_bitexact_flag_changes_route(capsys):
    plain = run_cli(capsys, "gen", "--seed", "5", "--dist", "gumbel", "-n", "4")
    exact = run_cli(
        capsys, "gen", "--seed", "5", "--dist", "gumbel", "-n", "4", "--bitexact",
    )
    assert plain[0] == 0 and exact[0] == 0
    ref = state_io.create(seed=[5])
    ref.set_bitexact(True)
    assert [float(x) for x in exact[1].splitlines()] == ref.fill("gumbel", {}, 4)


def test_raw_sizes_and_determinism(tmp_path, capsys):
    out = tmp_path / "bytes.bin"
    code, _, _ = run_cli(
        capsys, "raw", "--engine", "x256**", "--seed", "11",
        "--bytes", "1000", "-o", str(out),
    )
    assert code == 0
    data = out.read_bytes()
    assert data == state_io.create("x256**", seed=[11]).raw(1000)


def test_raw_bit_reverse(tmp_path, capsys):
    out = tmp_path / "rev.bin"
    code, _, _ = run_cli(
        capsys, "raw", "--engine", "x256**", "--seed", "11",
        "--bytes", "256", "--bit-reverse", "-o", str(out),
    )
    assert code == 0
    plain = state_io.create("x256**", seed=[11]).raw(256)
    rev = bytes(int("{:08b}".format(b)[::-1], 2) for b in plain)
    assert out.read_bytes() == rev


def test_engines_listing(capsys):
    code, out, _ = run_cli(capsys, "engines")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 14
    assert lines[0].startswith("x256++ ")
    assert any("chacha20" in line for line in lines)


def test_selftest_small_run(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--engine", "sfc64", "-n", "5000")
    lines = out.strip().splitlines()
    assert len(lines) == 39
    assert lines[-1].startswith("engine sfc64:")
    if code == 0:
        assert lines[-1].endswith("all checks passed")
        assert all(line.rstrip().endswith("pass") for line in lines[:-1])
    else:
        assert code == 1


def test_jumptable_verifies_committed_table(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "jumptable")
    assert code == 0
    assert "byte-identical" in out

    target = tmp_path / "table.txt"
    code, out, _ = run_cli(capsys, "jumptable", "-o", str(target))
    assert code == 0
    assert target.read_text() == jumps.TABLE_PATH.read_text()


def test_bench_smoke(capsys):
    code, out, _ = run_cli(
        capsys, "bench", "--engines", "pcg64", "--runs", "1",
        "--seconds", "0.02", "--skip-dists",
    )
    assert code == 0
    assert "pcg64" in out


def test_usage_error_is_exit_2(capsys):
    # argparse handles malformed invocations itself and exits with 2
    with pytest.raises(SystemExit) as ei:
        cli.main(["gen", "--format", "midi"])
    assert ei.value.code == 2
    with pytest.raises(SystemExit) as ei:
        cli.main([])
    assert ei.value.code == 2
    capsys.readouterr()


def test_installed_entry_point():
    proc = subprocess.run(
        ["randstream", "gen", "--engine", "pcg64", "--seed", "42", "-n", "2"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0, proc.stderr
    ref = state_io.create("pcg64", seed=[42]).fill("u01", {}, 2)
    assert [float(x) for x in proc.stdout.split()] == ref
    assert sys.executable  # the module also runs as python -m randstream.cli
