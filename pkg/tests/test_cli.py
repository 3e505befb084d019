import json
import subprocess
import sys

import pytest

from weightideals.cli import main, render_json

from conftest import ARRAYS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def arr(name):
    return str(ARRAYS / name)


def test_compare_eq_text(capsys):
    code, out, _ = run(capsys, "compare", "--array", arr("fingen.arr"), "--lhs", "1 2", "--rhs", "3 1")
    assert code == 0
    assert out.splitlines()[0] == "EQ (difference lies in I_A)"
    assert "log-weight 8" in out


def test_compare_plain(capsys):
    code, out, _ = run(capsys, "compare", "--array", arr("linear.arr"), "--lhs", "1 1 1", "--rhs", "4 4")
    assert code == 0 and out.startswith("GT")


def test_verify_infgen(capsys):
    code, out, _ = run(capsys, "verify", "infgen", "--n", "4", "--array", arr("infgen.arr"))
    assert code == 0
    assert "2, 3, 0, 5, 3, -3" in out
    assert "tail coefficient 4 disagrees" in out
    assert out.rstrip().endswith("pass")


def test_check_counterexample(capsys):
    code, out, _ = run(capsys, "check", "--array", arr("bad.arr"), "--max-len", "1", "--max-shift", "2")
    assert code == 1
    assert "counterexample: x2 vs x1 at shift 0" in out


def test_check_pass(capsys):
    code, out, _ = run(capsys, "check", "--array", arr("coprime.arr"), "--max-len", "3")
    assert code == 0 and "pass" in out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify-order", "--array", arr("leftlex.arr"), "--confirm-len", "6")
    assert code == 0 and out.startswith("LeftLenLex")
    code, out, _ = run(capsys, "classify-order", "--array", arr("fingen.arr"), "--confirm-len", "3")
    assert code == 1 and out.startswith("Inconclusive")


def test_equiv(capsys):
    code, out, _ = run(capsys, "equiv", "--array", arr("fingen.arr"), "--other", arr("infgen.arr"))
    assert code == 2  # different row counts
    code, out, _ = run(capsys, "equiv", "--array", arr("linear.arr"), "--other", arr("linear.arr"))
    assert code == 0


def test_relations_and_gens(capsys):
    code, out, _ = run(capsys, "relations", "--array", arr("fingen.arr"), "--length", "2")
    assert code == 0 and "6 relations of length 2" in out
    code, out, _ = run(capsys, "relations", "--array", arr("linear.arr"), "--length", "2",
                       "--disjoint-only")
    assert "x4x1 - x3x2" in out
    code, out, _ = run(capsys, "gens", "--array", arr("linear.arr"), "--max-len", "4")
    assert code == 0 and "  x4x1 - x3x2" in out
    code, out, _ = run(capsys, "gens", "--array", arr("fingen.arr"), "--max-len", "3")
    assert code == 0


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--array", arr("linear.arr"),
                       "--lhs", "3 2 3 2", "--rhs", "4 1 4 1")
    assert code == 0 and "expansion verified" in out
    code, out, _ = run(capsys, "decompose", "--array", arr("coprime.arr"),
                       "--lhs", "1 4", "--rhs", "2 3")
    assert code == 1 and "not in I_A" in out


def test_verify_fingen_and_appendix(capsys):
    code, out, _ = run(capsys, "verify", "fingen", "--max-len", "4")
    assert code == 0
    code, out, _ = run(capsys, "verify", "appendix", "--max-len", "4")
    assert code == 0 and "x1x1.. vs x3x3..: blocked" in out


@pytest.mark.parametrize("argv", [
    ["compare", "--array", "nope.arr", "--lhs", "1", "--rhs", "2"],
    ["compare", "--array", str(ARRAYS / "fingen.arr"), "--lhs", "9", "--rhs", "1"],
    ["compare", "--array", str(ARRAYS / "fingen.arr"), "--lhs", "", "--rhs", "1"],
    ["check", "--array", str(ARRAYS / "fingen.arr"), "--max-len", "0"],
    ["verify", "infgen", "--n", "5"],
    ["verify", "appendix", "--array", str(ARRAYS / "infgen.arr")],
])
def test_errors_exit_two_with_one_line(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert len(err.splitlines()) == 1 and err.startswith("error: ")


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compare"])
    assert exc.value.code == 2


def test_parse_error_reports_line(tmp_path, capsys):
    p = tmp_path / "x.arr"
    p.write_text("family: loglinear\nlog_first_column: 1 2\nslope: 1\n")
    code, _, err = run(capsys, "check", "--array", str(p))
    assert code == 2 and "slope" in err


JSON_CASES = [
    ["compare", "--array", arr("fingen.arr"), "--lhs", "1 2", "--rhs", "3 1"],
    ["check", "--array", arr("bad.arr"), "--max-len", "1", "--max-shift", "2"],
    ["classify-order", "--array", arr("leftlex.arr")],
    ["relations", "--array", arr("linear.arr"), "--length", "3"],
    ["gens", "--array", arr("linear.arr"), "--max-len", "4"],
    ["decompose", "--array", arr("linear.arr"), "--lhs", "3 2 3 2", "--rhs", "4 1 4 1"],
    ["verify", "infgen", "--n", "4"],
    ["verify", "fingen", "--max-len", "3"],
]


@pytest.mark.parametrize("argv", JSON_CASES)
def test_json_roundtrip_and_determinism(capsys, argv):
    code1, out1, _ = run(capsys, *argv, "--json")
    code2, out2, _ = run(capsys, *argv, "--json")
    assert out1 == out2 and code1 == code2
    data = json.loads(out1)
    assert render_json(data) == out1
    assert {"command", "inputs", "verdict", "certificates"} <= set(data)


def test_json_rationals_are_strings(capsys):
    _, out, _ = run(capsys, "classify-order", "--array", arr("leftlex.arr"), "--json")
    cert = json.loads(out)["certificates"][0]
    assert cert["slope"] == "1/3" and cert["alpha"] == "1"


def test_json_counterexample(capsys):
    _, out, _ = run(capsys, "check", "--array", arr("bad.arr"), "--json")
    data = json.loads(out)
    assert data["counterexample"]["lhs"] == "2" and data["counterexample"]["shift"] == 0


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "weightideals", "compare", "--array",
                        arr("fingen.arr"), "--lhs", "1 2", "--rhs", "3 1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("EQ")
