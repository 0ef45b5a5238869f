import itertools
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

import springer_k.verify as verify
from springer_k.cli import main

DOCS = Path(__file__).resolve().parents[1] / "docs"


def schema(name):
    return json.loads((DOCS / f"{name}.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_present_text(capsys):
    code, out, _ = run(capsys, "present", "--lambda", "2,1", "--flavor", "EqK", "--format", "text")
    assert code == 0
    assert "generators 6" in out.splitlines()[0]
    assert len([l for l in out.splitlines() if l.startswith("  [")]) == 6


def test_present_flag_json(capsys):
    code, out, _ = run(capsys, "present", "--lambda", "1,1", "--flavor", "Flag", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("presentation"))
    assert code == 0 and len(data["generators"]) == 2
    assert [g["poly"] for g in data["generators"]] == ["x1 + x2 - t1 - t2", "x1*x2 - t1*t2"]


def test_present_one_row(capsys):
    code, out, _ = run(capsys, "present", "--lambda", "3", "--flavor", "EqK", "--format", "json")
    s1 = [g["poly"] for g in json.loads(out)["generators"] if g["s"] == 1]
    assert s1 == ["x1 - u1", "x2 - u1", "x3 - u1"]


def test_present_cohomology_renames(capsys):
    _, out, _ = run(capsys, "present", "--lambda", "2,1", "--flavor", "EqCoh", "--format", "json")
    data = json.loads(out)
    assert data["ambient"] == {"y": 3, "u": 2, "invertible": []}
    assert data["generators"][3]["poly"] == "y1 + y2 + y3 - 2*u1 - u2"


def test_text_and_json_carry_same_generators(capsys):
    _, text, _ = run(capsys, "present", "--lambda", "2,2", "--format", "text")
    _, js, _ = run(capsys, "present", "--lambda", "2,2", "--format", "json")
    polys = [line.split("]  ", 1)[1] for line in text.splitlines()[1:]]
    assert polys == [g["poly"] for g in json.loads(js)["generators"]]


@pytest.mark.parametrize("lam,flavor,expected", [("2,1", "EqK", "3"), ("1,1,1,1", "EqCoh", "24"), ("5", "EqK", "1")])
def test_rank(capsys, lam, flavor, expected):
    code, out, _ = run(capsys, "rank", "--lambda", lam, "--flavor", flavor, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("report"))
    assert code == 0 and data["pass"]
    assert [r["got"] for r in data["reports"]] == [expected, expected]
    assert [r["seed"] for r in data["reports"]] == [17, 18]


def test_fixed_points(capsys):
    code, out, _ = run(capsys, "fixed-points", "--lambda", "2,1", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("fixed_points"))
    assert data["count"] == 3 and data["points"] == [[1, 2, 3], [1, 3, 2], [3, 1, 2]]
    _, out, _ = run(capsys, "fixed-points", "--lambda", "4")
    assert out.splitlines() == ["1 2 3 4", "count 1"]
    _, out, _ = run(capsys, "fixed-points", "--lambda", "1,1,1", "--format", "json")
    assert json.loads(out)["count"] == 6


@pytest.mark.parametrize("lam,count", [("2,1", 3), ("3", 1), ("1,1,1", 6)])
def test_basis(capsys, lam, count):
    code, out, _ = run(capsys, "basis", "--lambda", lam, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("basis"))
    assert code == 0 and data["count"] == count == len(data["monomials"])
    if lam == "3":
        assert data["monomials"] == ["1"]


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--lambda", "2,1", "--suite", "all", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("report"))
    assert code == 0 and data["pass"]
    checks = {r["check"] for r in data["reports"]}
    assert {"gkm_vanishing", "localization_injectivity", "equivariance", "ordinary_specialization",
            "classical_limit", "lambda_operation_identity", "compact_equivalence", "flag_consistency"} <= checks


def test_verify_gkm_22(capsys):
    code, out, _ = run(capsys, "verify", "--lambda", "2,2", "--suite", "gkm", "--format", "json")
    data = json.loads(out)
    vanish = data["reports"][0]
    assert code == 0 and vanish["pass"]
    assert vanish["detail"]["fixed_points"] == 6
    assert vanish["detail"]["comparisons"] == 6 * 12


def test_verify_flag_consistency(capsys):
    code, out, _ = run(capsys, "verify", "--lambda", "1,1,1", "--suite", "flag-consistency")
    assert code == 0 and out.strip().endswith("2/2 checks passed")


def test_usage_errors(capsys):
    assert main(["present", "--lambda", "2,x"]) == 2
    assert main(["present", "--lambda", "0,1"]) == 2
    assert main(["present"]) == 2
    assert main(["present", "--lambda", "2,1", "--flavor", "Nope"]) == 2
    assert main(["bogus"]) == 2
    capsys.readouterr()


def test_unsorted_lambda_warns(capsys):
    code, out, err = run(capsys, "fixed-points", "--lambda", "1,2")
    assert code == 0 and "warning" in err and out.splitlines()[-1] == "count 3"


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SPRINGER_K_SEED", "5")
    _, out, _ = run(capsys, "rank", "--lambda", "2,1", "--format", "json")
    assert [r["seed"] for r in json.loads(out)["reports"]] == [5, 6]
    monkeypatch.setenv("SPRINGER_K_SEED", "abc")
    assert main(["rank", "--lambda", "2,1"]) == 2


def test_degenerate_exit_code(capsys, monkeypatch):
    counter = itertools.count()
    monkeypatch.setattr(verify, "quotient_dimension", lambda G: next(counter))
    assert main(["rank", "--lambda", "2,1"]) == 3
    assert "degenerate" in capsys.readouterr().err


def test_failure_exit_code_and_counterexample(capsys, monkeypatch):
    import springer_k.suites as suites

    monkeypatch.setattr(suites, "multinomial", lambda lam: 99)
    code, out, _ = run(capsys, "rank", "--lambda", "2,1")
    assert code == 1
    assert "FAIL" in out and "first counterexample" in out


def test_timing_flag(capsys):
    _, out, _ = run(capsys, "rank", "--lambda", "2,1", "--format", "json")
    assert all(r["elapsed_ms"] is None for r in json.loads(out)["reports"])
    _, out, _ = run(capsys, "rank", "--lambda", "2,1", "--format", "json", "--timing")
    assert all(isinstance(r["elapsed_ms"], float) for r in json.loads(out)["reports"])


def test_deterministic_bytes():
    argv = [sys.executable, "-m", "springer_k", "verify", "--lambda", "2,1", "--suite", "all", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
