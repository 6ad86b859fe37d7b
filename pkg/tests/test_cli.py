import random

import pytest

from tmft.cli import run
from tmft.fileio import (
    FormatError,
    format_signal,
    format_spectrum,
    parse_signal,
    parse_spectrum,
    parse_spectrum_file,
)
from tmft.ring import make_ring
from tmft.transform import Signal, dirac, tmft_fast


class Capture:
    def __init__(self):
        self.lines = []

    def __call__(self, msg):
        self.lines.extend(str(msg).splitlines())


def cli(*argv):
    out, err = Capture(), Capture()
    code = run(list(argv), out=out, err=err)
    return code, out.lines, err.lines


@pytest.fixture
def onehot(tmp_path):
    path = tmp_path / "onehot.sig"
    path.write_text("".join(format(1 << j, "x") + "\n" for j in range(8)))
    return path


def test_transform_onehot(tmp_path, onehot):
    spec = tmp_path / "s.spec"
    code, out, _ = cli("transform", "--n", "3", "--ring", "bitvec:8", "--in", str(onehot),
                       "--out", str(spec), "--count")
    assert code == 0
    assert "additions=25" in out and "formula=25" in out
    lines = spec.read_text().splitlines()
    assert lines[0] == "n=3 ring=bitvec:8 scheme=tree"
    assert lines[1] == "ff"
    # row 2 entry 3 (c = 11) is the E_11 coefficient: f_2 + f_6
    assert lines[3].split()[3] == format((1 << 2) | (1 << 6), "x")
    # row 3 entry 4 (c = 100) collects labels 100, 101, 110, 111: f_6, f_7, f_5, f_4
    assert lines[4].split()[4] == format(0b11110000, "x")


def test_direct_method_count(tmp_path, onehot):
    code, out, _ = cli("transform", "--n", "3", "--ring", "bitvec:8", "--in", str(onehot),
                       "--out", str(tmp_path / "d.spec"), "--count", "--method", "direct")
    assert code == 0 and "additions=29" in out


def test_inverse_round_trip_bytes(tmp_path, onehot):
    spec, back = tmp_path / "s.spec", tmp_path / "back.sig"
    assert cli("transform", "--n", "3", "--ring", "bitvec:8", "--in", str(onehot), "--out", str(spec))[0] == 0
    code, out, _ = cli("inverse", "--in", str(spec), "--out", str(back), "--count")
    assert code == 0
    assert back.read_bytes() == onehot.read_bytes()
    assert "additions=49" in out


@pytest.mark.parametrize("scheme", ["tree", "flat"])
def test_round_trip_random_files(tmp_path, scheme):
    rng = random.Random(4)
    ring = make_ring("gf:8:11b")
    f = Signal(5, ring, [ring.random_element(rng) for _ in range(32)])
    src = tmp_path / "f.sig"
    src.write_text(format_signal(f))
    spec, back = tmp_path / "f.spec", tmp_path / "g.sig"
    assert cli("transform", "--n", "5", "--ring", "gf:8:11b", "--scheme", scheme,
               "--in", str(src), "--out", str(spec))[0] == 0
    assert parse_spectrum_file(spec).scheme.value == scheme
    assert cli("inverse", "--in", str(spec), "--out", str(back))[0] == 0
    assert back.read_text() == src.read_text()


def test_convolve_methods_agree(tmp_path):
    rng = random.Random(8)
    paths = []
    for name in ("r", "s"):
        p = tmp_path / f"{name}.sig"
        p.write_text("".join(format(rng.getrandbits(8), "x") + "\n" for _ in range(16)))
        paths.append(str(p))
    a, b = tmp_path / "a.sig", tmp_path / "b.sig"
    code_a, out_a, _ = cli("convolve", "--n", "4", "--ring", "gf:8:11b", "--in", *paths,
                           "--out", str(a), "--method", "spectral", "--count")
    code_b, out_b, _ = cli("convolve", "--n", "4", "--ring", "gf:8:11b", "--in", *paths,
                           "--out", str(b), "--method", "direct", "--count")
    assert code_a == code_b == 0
    assert a.read_bytes() == b.read_bytes()
    assert "multiplications=256" in out_b
    assert "transform_additions=334" in out_a and "formula_transform_additions=334" in out_a


def test_cost_csv(tmp_path):
    code, out, _ = cli("cost", "--n-min", "1", "--n-max", "20")
    assert code == 0
    assert out[0] == "n,fast_tmft,tmft,itmft,ratio,direct_conv_mults,spectral_conv_adds"
    assert len(out) == 21
    assert out[3].startswith("3,25,29,49,")
    target = tmp_path / "c.csv"
    assert cli("cost", "--n-max", "5", "--measured", "--out", str(target))[0] == 0
    assert target.read_text().splitlines()[0].endswith("measured_itmft")


def test_selftest():
    code, out, _ = cli("selftest")
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out)


def test_usage_errors(tmp_path, onehot):
    assert cli()[0] == 1
    assert cli("frobnicate")[0] == 1
    assert cli("transform", "--n", "3", "--ring", "bitvec:8")[0] == 1
    assert cli("transform", "--n", "0", "--ring", "bitvec:8", "--in", str(onehot), "--out", "x")[0] == 1
    assert cli("transform", "--n", "3", "--ring", "gf:2:5", "--in", str(onehot), "--out", "x")[0] == 1
    assert cli("cost", "--n-min", "3", "--n-max", "2")[0] == 1


def test_format_errors(tmp_path, onehot):
    short = tmp_path / "short.sig"
    short.write_text("0\n" * 7)
    out = str(tmp_path / "o")
    assert cli("transform", "--n", "3", "--ring", "bitvec:8", "--in", str(short), "--out", out)[0] == 2
    badhex = tmp_path / "bad.sig"
    badhex.write_text("0\n" * 7 + "zz\n")
    assert cli("transform", "--n", "3", "--ring", "bitvec:8", "--in", str(badhex), "--out", out)[0] == 2
    wide = tmp_path / "wide.sig"
    wide.write_text("0\n" * 7 + "100\n")
    assert cli("transform", "--n", "3", "--ring", "bitvec:8", "--in", str(wide), "--out", out)[0] == 2
    assert cli("transform", "--n", "3", "--ring", "bitvec:8", "--in", str(tmp_path / "nope"), "--out", out)[0] == 2

    spec = tmp_path / "s.spec"
    cli("transform", "--n", "3", "--ring", "bitvec:8", "--in", str(onehot), "--out", str(spec))
    assert cli("inverse", "--in", str(spec), "--out", out, "--scheme", "flat")[0] == 2
    assert cli("inverse", "--in", str(spec), "--out", out, "--n", "4")[0] == 2
    assert cli("inverse", "--in", str(spec), "--out", out, "--ring", "gf:8:11b")[0] == 2
    lines = spec.read_text().splitlines()
    mangled = tmp_path / "m.spec"
    mangled.write_text("\n".join(lines[:-1] + [" ".join(lines[-1].split()[:-1])]) + "\n")
    assert cli("inverse", "--in", str(mangled), "--out", out)[0] == 2
    mangled.write_text("\n".join(["n=3 ring=bitvec:8"] + lines[1:]) + "\n")
    assert cli("inverse", "--in", str(mangled), "--out", out)[0] == 2


def test_invariant_violation(tmp_path):
    spec = tmp_path / "bad.spec"
    spec.write_text("n=2 ring=gf:8:11b scheme=tree\n1\n0 0\n1 0 0 0\n")
    assert cli("inverse", "--in", str(spec), "--out", str(tmp_path / "o"))[0] == 3


def test_file_formats():
    ring = make_ring("gf:2:7")
    zero = parse_signal("00\n" * 4, 2, ring)
    assert zero.values == (0, 0, 0, 0)
    F, _ = tmft_fast(dirac(2, ring))
    text = format_spectrum(F)
    assert text.splitlines()[1:] == ["1", "1 0", "1 0 0 0"]
    assert parse_spectrum(text) == F
    assert format_signal(parse_signal("1\n0\n3\n2\n", 2, ring)) == "1\n0\n3\n2\n"
    with pytest.raises(FormatError):
        parse_signal("0\n" * 3, 2, ring)
