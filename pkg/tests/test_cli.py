import json
import subprocess
import sys

import pytest

import weightmult.harness as harness
from weightmult.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dim(capsys):
    assert run(capsys, "dim", "--algebra", "G2", "--highest", "9,9") == (0, "1000000\n", "")


@pytest.mark.parametrize("method", ["freudenthal", "kostant", "polytope"])
def test_mult(capsys, method):
    code, out, _ = run(capsys, "mult", "--algebra", "A2", "--highest", "1,1", "--offset", "1,1",
                       "--method", method)
    assert (code, out) == (0, "2\n")


@pytest.mark.parametrize("method", ["freudenthal", "kostant", "polytope"])
def test_mult_asymmetric_offset(capsys, method):
    # from the lowest weight (0,-2) of A2 (2,0): +alpha2 gives (-1,0), a weight; +alpha1 does not
    base = ("mult", "--algebra", "A2", "--highest", "2,0", "--method", method, "--offset")
    assert run(capsys, *base, "0,1")[:2] == (0, "1\n")
    assert run(capsys, *base, "1,0")[:2] == (0, "0\n")


def test_diagram_to_file(capsys, tmp_path):
    path = tmp_path / "m.txt"
    code, out, _ = run(capsys, "diagram", "--algebra", "A2", "--highest", "1,1", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().splitlines()[0] == "m(0,0)=1"


def test_diagram_structured(capsys):
    code, out, _ = run(capsys, "diagram", "--algebra", "B2", "--highest", "1,0", "--method",
                       "kostant", "--format", "structured")
    assert code == 0
    assert json.loads(out)["dimension"] == 5


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "A2", "--highest", "5,3")
    assert code == 0
    assert "OK" in out


def test_verify_divergence(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "G2", "--highest", "1,0")
    assert code == 3
    assert "divergence" in out


def test_verify_too_few_methods(capsys):
    code, out, _ = run(capsys, "--weyl-cap", "100", "verify", "--algebra", "B3", "--highest",
                       "1,0,0", "--methods", "kostant,polytope")
    assert code == 2
    assert "skipped" in out


@pytest.mark.parametrize("argv", [
    ("dim", "--algebra", "A2", "--highest", "1,-1"),
    ("dim", "--algebra", "A2", "--highest", "1,1,1"),
    ("dim", "--algebra", "Q7", "--highest", "1"),
    ("mult", "--algebra", "A2", "--highest", "1,1", "--offset", "1"),
    ("diagram", "--algebra", "A2", "--highest", "1,1", "--method", "freudenthal", "--format",
     "tabular", "--out", "/nonexistent/dir/out.csv"),
])
def test_validation_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith("error:")


def test_unavailable_polytope(capsys):
    code, _, err = run(capsys, "diagram", "--algebra", "C3", "--highest", "2,1,0")
    assert code == 2
    assert "no closed-form polytope known" in err


def test_unavailable_kostant(capsys):
    code, _, err = run(capsys, "--weyl-cap", "100", "diagram", "--algebra", "F4", "--highest",
                       "1,0,0,0", "--method", "kostant")
    assert code == 2
    assert "Weyl group too large" in err


def test_cap_precedence(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"weyl_cap": 5}))
    argv = ("diagram", "--algebra", "B2", "--highest", "1,0", "--method", "kostant")
    assert run(capsys, "--config", str(cfg), *argv)[0] == 2
    monkeypatch.setenv("WEIGHTMULT_WEYL_CAP", "100")
    assert run(capsys, "--config", str(cfg), *argv)[0] == 0
    assert run(capsys, "--weyl-cap", "4", "--config", str(cfg), *argv)[0] == 2


def test_bench(capsys, tmp_path, monkeypatch):
    monkeypatch.setitem(harness.SUITES, "default", (("A2", (1, 1)),))
    path = tmp_path / "bench.tsv"
    code, out, _ = run(capsys, "bench", "--reps", "1", "--out", str(path))
    assert code == 0
    assert path.read_text() == out
    assert "algebra\thighest\tmethod" in out
    assert run(capsys, "bench", "--reps", "0")[0] == 1


def test_fit_polytope(capsys):
    code, out, _ = run(capsys, "fit-polytope", "--algebra", "A2", "--highest", "1,1")
    doc = json.loads(out)
    assert code == 0 and doc["success"]
    assert len(doc["points"]) == 8


def test_fit_polytope_failure(capsys):
    code, out, _ = run(capsys, "fit-polytope", "--algebra", "A2", "--highest", "3,2",
                       "--budget", "5")
    assert code == 2
    assert json.loads(out)["success"] is False


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weightmult", "dim", "--algebra", "A4",
                           "--highest", "2,2,2,2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == f"{3 ** 10}\n"
