import json
import subprocess
import sys

import pytest

from heckekoszul.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_prints_bernstein_form(capsys):
    code, out, _ = run(capsys, "hecke", "eval", "KIM(T[1])", "--type", "A1")
    assert code == 0
    assert out.strip() == "(-v + v^-1) * theta[0] * T[] + theta[0] * T[1]"


def test_eval_theta_zero(capsys):
    assert run(capsys, "hecke", "eval", "theta[0,0]", "--type", "B2")[1].strip() == "theta[0,0] * T[]"


def test_eval_syntax_error(capsys):
    code, _, err = run(capsys, "hecke", "eval", "theta[1,")
    assert code == 2
    assert "offset 8" in err


def test_eval_not_invertible(capsys):
    code, _, err = run(capsys, "hecke", "eval", "(v+1)^-1")
    assert code == 1 and "not invertible" in err


def test_verify_hecke_a2(capsys):
    code, out, _ = run(capsys, "verify", "hecke", "--type", "A2", "--weight-bound", "3", "--seed", "7")
    assert code == 0
    assert "0 failed" in out


def test_verify_bad_spec_fails_with_witness(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "hecke", "--type", "A1", "--spec", "T->T+1", "--json", str(path))
    assert code == 1
    assert "relation (vi)" in out
    doc = json.loads(path.read_text())
    (check,) = doc["checks"]
    assert check["status"] == "fail" and check["witness"].startswith("relation (vi)")
    assert doc["params"]["spec"] == "T->T+1"


def test_verify_convolution_small(capsys):
    code, out, _ = run(capsys, "verify", "convolution", "--dim", "1", "--fdim", "0", "--trials", "50", "--seed", "1")
    assert code == 0, out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "hecke", "--type", "Z7"],
        ["verify", "nothing"],
        ["verify", "koszul", "--window", "3,1"],
        ["verify", "koszul", "--window", "x"],
        ["verify", "convolution", "--dim", "1", "--fdim", "2"],
        ["verify", "hecke", "--type", "A1", "--spec", "T->T+"],
        ["hecke", "eval", "T[1]", "--type", "nope"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_json_report_is_sorted_and_untimed(capsys, tmp_path):
    path = tmp_path / "k.json"
    assert run(capsys, "verify", "koszul", "--trials", "3", "--json", str(path))[0] == 0
    doc = json.loads(path.read_text())
    assert list(doc) == ["checks", "params", "seed", "suite"]
    names = [c["name"] for c in doc["checks"]]
    assert names == sorted(names)
    assert all("elapsed" not in c for c in doc["checks"])
    run(capsys, "verify", "koszul", "--trials", "3", "--json", str(path), "--timing")
    assert all("elapsed" in c for c in json.loads(path.read_text())["checks"])


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "heckekoszul", "hecke", "eval", "T[1]^-1"], capture_output=True, text=True
    )
    assert res.returncode == 0
    assert res.stdout.strip() == "(-v + v^-1) * theta[0] * T[] + theta[0] * T[1]"
