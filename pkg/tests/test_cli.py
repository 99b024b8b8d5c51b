from __future__ import annotations

import csv
import io
import json
import math
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from conftest import REFERENCE, function_case
from ellipleg.checks import CriterionResult
from ellipleg.cli import VERIFY_COLUMNS, _json_value, main


def run(capsys, *argv):
    code = main(["--no-timestamp", *argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_fundamental(capsys):
    code, out, _ = run(capsys, "eval", "--kind", "ferrers-p", "--nu", "-1/2", "--mu", "0",
                       "--arg", "0.0", "--format", "json")
    assert code == 0
    data = json.loads(out)
    expected = 2 / math.pi * REFERENCE["special"]["K_0.5"]
    assert data["value"] == pytest.approx(expected, rel=1e-14)
    assert data["method"] == "elliptic"


def test_eval_quarter_text(capsys):
    code, out, _ = run(capsys, "eval", "--kind", "legendre-p", "--nu", "-1/4", "--mu", "0",
                       "--arg", "1.5")
    assert code == 0
    expected = function_case("legendre-p", "-1/4", "0", "1.5")["value"]
    assert f"value   {expected:.12g}" in out
    assert "I4(i)" in out
    assert "K(m0)" in out


def test_eval_closed_form(capsys):
    code, out, _ = run(capsys, "eval", "--kind", "ferrers-p", "--nu", "-1/6", "--mu", "-1/4",
                       "--arg", "0.5", "--closed-form", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    expected = function_case("ferrers-p", "-1/6", "-1/4", "0.5")["value"]
    assert float(rows[0]["value"]) == pytest.approx(expected, rel=1e-10)
    assert rows[0]["method"].startswith("closed form")


def test_eval_csv_has_combination(capsys):
    code, out, _ = run(capsys, "eval", "--kind", "ferrers-q", "--nu", "2/3", "--mu", "1",
                       "--arg", "0.3", "--format", "csv")
    header, row = out.strip().split("\n")
    assert header.split(",")[-5:] == ["modulus", "coef_k", "coef_e", "coef_kc", "coef_ec"]
    assert row.split(",")[5] == "elliptic via I3"


@pytest.mark.parametrize("argv", [
    ["eval", "--kind", "legendre-p", "--nu", "-1/4", "--mu", "0", "--arg", "0.5"],
    ["eval", "--kind", "legendre-p", "--nu", "abc", "--mu", "0", "--arg", "2"],
    ["eval", "--kind", "nope", "--nu", "1", "--mu", "0", "--arg", "2"],
    ["eval", "--kind", "legendre-p", "--nu", "3", "--mu", "2", "--arg", "2", "--closed-form"],
    ["verify", "--identity", "I9(i)", "--grid", "3"],
    ["verify", "--identity", "M(i-bar)", "--alpha", "0.5", "--grid", "3"],
    ["verify", "--identity", "I3(i)", "--alpha", "0.5", "--grid", "3"],
    ["laplace", "--s", "1/2", "--m", "0", "--alpha", "1.5"],
    [],
])
def test_usage_and_domain_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        code = main(["--no-timestamp", *argv])
        raise SystemExit(code)
    assert info.value.code == 1


def test_degenerate_message(capsys):
    code, _, err = run(capsys, "verify", "--identity", "M(i-bar)", "--alpha", "0.5", "--grid", "3")
    assert code == 1
    assert "Olver" in err


def test_verify_single(capsys, tmp_path):
    out_path = tmp_path / "i6.csv"
    code, out, err = run(capsys, "verify", "--identity", "I6(i)", "--grid", "50",
                         "--alpha", "0,0.2,1", "--out", str(out_path))
    assert code == 0 and out == ""
    rows = list(csv.DictReader(out_path.open()))
    assert tuple(rows[0]) == VERIFY_COLUMNS
    assert len(rows) == 150
    assert max(float(r["gap"]) for r in rows) <= 1e-9
    assert "max gap" in err


def test_verify_all_parallel_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "verify", "--identity", "all", "--grid", "20", "--out", str(a))[0] == 0
    assert run(capsys, "verify", "--identity", "all", "--grid", "20", "--jobs", "4",
               "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    labels = {r["label"] for r in csv.DictReader(a.open())}
    assert len(labels) == 34


def test_verify_failure_exit(capsys, monkeypatch):
    monkeypatch.setattr("ellipleg.cli.GAP_TOLERANCE", 0.0)
    code, _, _ = run(capsys, "verify", "--identity", "I4(i)", "--grid", "5", "--alpha", "0.3")
    assert code == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--curve", "C6")
    assert code == 0
    data = json.loads(out)
    assert data["curve"] == "C6"
    row = next(r for r in data["intervals"] if r["p_lo"] == 1)
    assert row["L_lo"] == 1 and row["L_hi"] == "inf"
    assert row["R_hi"] == pytest.approx(math.sqrt(3) / 2)
    code, out, _ = run(capsys, "table")
    assert len(json.loads(out)) == 10


def test_laplace(capsys):
    code, out, _ = run(capsys, "laplace", "--s", "3/2", "--m", "2", "--alpha", "0.3", "--check")
    assert code == 0
    assert out.startswith("convention: b_s^(m)(alpha) = (1/pi)")
    code, out, _ = run(capsys, "laplace", "--s", "3/2", "--m", "2", "--alpha", "0.3",
                       "--format", "json", "--check")
    data = json.loads(out)
    assert data["value"] == pytest.approx(REFERENCE["applications"]["laplace_32_2_0.3"], rel=1e-8)
    assert data["value"] == pytest.approx(data["quadrature"], abs=1e-8)


def test_selftest_exit_codes(capsys, monkeypatch):
    ok = CriterionResult(1, "fake", True, 0.0, 1.0, "", 0.0)
    bad = CriterionResult(2, "fake", False, 2.0, 1.0, "", 0.0)
    monkeypatch.setattr("ellipleg.cli.run_all", lambda: [ok])
    assert run(capsys, "selftest")[0] == 0
    monkeypatch.setattr("ellipleg.cli.run_all", lambda: [ok, bad])
    code, out, _ = run(capsys, "selftest")
    assert code == 2
    assert "[FAIL]" in out and "1/2 criteria passed" in out


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_json_roundtrip(x):
    rendered = json.dumps(_json_value({"value": x, "list": [x, -x]}))
    back = json.loads(rendered)
    assert back["value"] == x
    assert back["list"] == [x, -x]


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "ellipleg", *argv], capture_output=True,
                          text=True, check=False)


def test_subprocess_determinism_and_timestamp():
    argv = ["eval", "--kind", "ferrers-q", "--nu", "-5/6", "--mu", "1", "--arg", "0.3",
            "--format", "json"]
    a, b = _cli(*argv), _cli(*argv)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert a.stderr.startswith("# generated ")
    quiet = _cli("--no-timestamp", *argv)
    assert quiet.stdout == a.stdout and quiet.stderr == ""


def test_subprocess_usage_exit():
    assert _cli("eval", "--kind", "legendre-p").returncode == 1
