"""Command-line surface: grammar, exit codes, exact JSON output."""

import json
from fractions import Fraction

import pytest

from eudoxos.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_pi_json_schema(capsys):
    code, out, _ = run(capsys, "pi", "--depth", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "ok"
    assert payload["depth"] == 4
    assert payload["sides"] == 96
    lo = Fraction(payload["value"]["lo"])
    hi = Fraction(payload["value"]["hi"])
    assert Fraction(3) + Fraction(10, 71) <= lo < hi <= Fraction(3) + Fraction(1, 7)
    assert "." not in payload["value"]["lo"]  # exact fraction strings only


def test_pi_nested_across_depths(capsys):
    values = []
    for depth in (2, 5, 8):
        _, out, _ = run(capsys, "pi", "--depth", str(depth), "--format", "json")
        payload = json.loads(out)
        values.append(
            (Fraction(payload["value"]["lo"]), Fraction(payload["value"]["hi"]))
        )
    for (lo1, hi1), (lo2, hi2) in zip(values, values[1:]):
        assert lo1 <= lo2 and hi2 <= hi1


def test_sin_nested_across_depths(capsys):
    values = []
    for depth in ("5", "9"):
        _, out, _ = run(capsys, "sin", "--times-pi", "1/6", "--depth", depth,
                        "--format", "json")
        payload = json.loads(out)
        values.append(
            (Fraction(payload["value"]["lo"]), Fraction(payload["value"]["hi"]))
        )
    (lo1, hi1), (lo2, hi2) = values
    assert lo1 <= lo2 and hi2 <= hi1


def test_deterministic_output(capsys):
    _, out1, _ = run(capsys, "sin", "1/2", "--depth", "8", "--format", "json")
    _, out2, _ = run(capsys, "sin", "1/2", "--depth", "8", "--format", "json")
    assert out1 == out2


def test_measure_terminating(capsys):
    code, out, _ = run(capsys, "measure", "--value", "5/4", "--unit", "1", "--base", "10")
    assert code == 0
    assert out.strip() == "1.25 (terminated)"


def test_measure_json(capsys):
    code, out, _ = run(
        capsys, "measure", "--value", "1/3", "--unit", "1", "--prefix", "6",
        "--format", "json",
    )
    payload = json.loads(out)
    assert payload["digits"] == [3, 3, 3, 3, 3, 3]
    assert payload["terminated"] is False
    assert Fraction(payload["value"]["hi"]) - Fraction(payload["value"]["lo"]) == Fraction(1, 10**6)


def test_angle_command(capsys):
    code, out, _ = run(capsys, "angle", "1,0", "0,0", "0,1", "--depth", "10")
    assert code == 0
    assert out.startswith("1.5707")
    assert "unit=d" in out


def test_angle_unit_e(capsys):
    code, out, _ = run(capsys, "angle", "1,0", "0,0", "0,1", "--unit", "e", "--depth", "10")
    assert out.startswith("0.7853")


def test_ratio_add(capsys):
    code, out, _ = run(capsys, "ratio", "add", "1:2", "1:3")
    assert code == 0 and out.strip() == "5/6"


def test_ratio_eq_and_witness(capsys):
    code, out, _ = run(capsys, "ratio", "eq", "3:2", "6:4")
    assert code == 0 and out.strip() == "proportional"
    code, out, _ = run(capsys, "ratio", "eq", "3:2", "2:1")
    assert code == 0
    assert "not-proportional" in out and "m=2 n=1" in out


def test_ratio_cut(capsys):
    code, out, _ = run(capsys, "ratio", "cut", "3:2", "3", "2")
    assert out.strip() == "boundary"


def test_xii2(capsys):
    code, out, _ = run(capsys, "xii2", "1", "2", "--depth", "6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "ok"
    assert payload["squares_ratio"] == "1/4"


def test_check_proposition(capsys):
    code, out, _ = run(capsys, "check", "--suite", "proposition", "--bound", "30")
    assert code == 0
    assert "witness" in out and "(1, 1)" in out


def test_check_limit(capsys):
    code, out, _ = run(capsys, "check", "--suite", "limit", "--depth", "10")
    assert code == 0
    assert "monotone: True" in out


def test_check_eta_exits_undecided(capsys):
    code, out, _ = run(capsys, "check", "--suite", "eta", "--depth", "8")
    assert code == 2
    assert "undecided" in out


def test_domain_error_exit(capsys):
    code, _, err = run(capsys, "asin", "3/2")
    assert code == 1
    assert "error" in err


def test_usage_error_exit():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 64


def test_polygon_file(tmp_path, capsys):
    path = tmp_path / "poly.txt"
    path.write_text("0,0\n4,0\n1,3\n")
    code, out, _ = run(capsys, "measure", "--polygon", str(path))
    assert code == 0 and out.strip() == "6"


def test_region_file(tmp_path, capsys):
    path = tmp_path / "region.txt"
    path.write_text("polygon: (0,0) (1,0) (1,1) (0,1)\nsector: 10,10,1,0,1/4\n")
    code, out, _ = run(capsys, "measure", "--region", str(path), "--depth", "8")
    assert code == 0
    assert out.strip().startswith("1.78")


def test_env_default_depth(capsys, monkeypatch):
    monkeypatch.setenv("EUDOXOS_DEPTH", "3")
    from eudoxos import cli

    parser = cli.build_parser()
    args = parser.parse_args(["pi"])
    assert args.depth == 3
