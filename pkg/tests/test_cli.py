import json
import subprocess
import sys

import pytest

from e36.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "e0prime", "f0")
    assert code == 0
    assert json.loads(out)["bracket"] == "x3*dp2"


def test_grade_and_weight(capsys):
    code, out, _ = run(capsys, "grade", "--which", "consistent", "x3*d35")
    assert json.loads(out)["degree"] == 1
    code, out, _ = run(capsys, "weight", "d14")
    assert json.loads(out)["weight"] == [1, 0, 1, "-1/3"]
    code, _, err = run(capsys, "weight", "d12")
    assert code == 2 and "E(3,6)" in err


def test_parse_errors_exit_2(capsys):
    code, _, err = run(capsys, "parse", "x5*d23")
    assert code == 2
    assert "closed" in json.loads(err)["error"]
    code, _, _ = run(capsys, "parse", "x3*")
    assert code == 2


def test_relations_pretty(capsys):
    code, out, _ = run(capsys, "--pretty", "relations")
    assert code == 0
    assert "deviation e1prime.dminus2" in out


def test_singular_json_schema(capsys):
    code, out, _ = run(capsys, "singular", "--p", "0", "--q", "0", "--r", "0", "--y", "0", "--max-depth", "1")
    js = json.loads(out)
    assert code == 0
    assert js["F"] == {"p": 0, "q": 0, "r": 0, "y": "0/1"}
    assert js["found"][0]["terms"][0]["dplus"] == [1]
    code, _, _ = run(capsys, "singular", "--p", "0", "--q", "0", "--max-depth", "1")
    assert code == 2


def test_parametric_singular(capsys):
    code, out, _ = run(capsys, "singular", "--p", "0", "--q", "0", "--parametric-y", "--max-depth", "1")
    assert json.loads(out)["conditions"][0]["rational-roots"] == ["0/1"]


def test_scan_and_verify(capsys):
    code, out, _ = run(capsys, "scan", "--pmax", "1", "--qmax", "1", "--r", "0,1", "--max-depth", "1")
    assert code == 0
    assert [r["r"] for r in json.loads(out)] == [0, 1]
    code, out, _ = run(capsys, "verify", "3.13", "--param", "pmax=1")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = run(capsys, "verify", "3.10", "--param", "pmax=1")
    assert code == 0 and json.loads(out)["status"] == "deviation"
    code, _, _ = run(capsys, "verify", "9.99")
    assert code == 2
    code, _, _ = run(capsys, "verify", "3.13", "--param", "pmax")
    assert code == 2


def test_hwv(capsys):
    code, out, _ = run(capsys, "hwv", "--p", "1", "--q", "1", "--sign", "-")
    assert code == 0
    assert len(json.loads(out)) == 8


def test_usage_error_exit_code(capsys):
    assert main(["nonsense"]) == 2
    assert main([]) == 2


def test_console_script_is_byte_identical():
    cmd = [sys.executable, "-m", "e36.cli", "hwv", "--p", "2", "--q", "1"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
