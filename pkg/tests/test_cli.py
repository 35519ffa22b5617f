import json
import subprocess
import sys
from pathlib import Path

import pytest

from lfeq import cli
from lfeq.funceq import EquationSpec
from lfeq.semihom import BiAddWitness

GOLDEN = Path(__file__).parent / "golden" / "reproduce_gf4.txt"


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reproduce_matches_golden(capsys):
    code, out, _ = run(capsys, "reproduce", "gf4")
    assert code == 0
    assert out == GOLDEN.read_text()


def test_reproduce_contents(capsys):
    _, out, _ = run(capsys, "reproduce", "gf4")
    assert "factored   (t+1)^2*(t^2+t+1)" in out
    assert "gamma set  {1, a, 1+a}" in out
    assert "  [0 1 0 1]\n  [1 1 1 1]\n  [0 1 0 0]\n  [1 1 0 0]" in out


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "lfeq", "reproduce", "gf4"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b == GOLDEN.read_bytes()


def test_biadd_trivial(capsys):
    code, out, _ = run(capsys, "semihom", "biadd", "-p", "2", "-n", "2",
                       "--alpha", "1", "--beta", "1", "--gamma", "1")
    assert code == 0
    assert "EXISTS" in out


def test_biadd_json_round_trip(capsys):
    code, out, _ = run(capsys, "semihom", "biadd", "-p", "2", "-n", "2",
                       "--alpha", "1+a", "--beta", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert [r["gamma"] for r in data["results"]] == [1, 2, 3]
    for r in data["results"]:
        w = BiAddWitness.from_json(r["witness"])
        assert w.to_json() == r["witness"] and r["verified"]


def test_biadd_absent_still_exit_zero(capsys):
    code, out, _ = run(capsys, "semihom", "biadd", "-p", "3", "--alpha", "1", "--beta", "1",
                       "--gamma", "2")
    assert code == 0 and "ABSENT" in out


def test_add_and_charpoly(capsys):
    code, out, _ = run(capsys, "semihom", "add", "-p", "2", "-n", "3", "--alpha", "a",
                       "--beta", "a^2")
    assert code == 0 and "EXISTS" in out
    code, out, _ = run(capsys, "semihom", "add", "-p", "2", "-n", "3", "--alpha", "a",
                       "--beta", "1")
    assert code == 0 and "ABSENT" in out
    code, out, _ = run(capsys, "semihom", "charpoly", "-p", "2", "-n", "2", "--alpha", "3",
                       "--beta", "2", "--json")
    data = json.loads(out)
    assert data["factors"] == [[[1, 1], 2], [[1, 1, 1], 1]]


def test_field_info(capsys):
    code, out, _ = run(capsys, "field", "info", "-p", "2", "-n", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["mul"][2][2] == 3 and data["modulus"] == [1, 1, 1]
    code, out, _ = run(capsys, "field", "info", "-p", "2", "-n", "7")
    assert code == 0 and "tables are printed" in out


def test_char0(capsys):
    code, out, _ = run(capsys, "char0", "decide", "--malpha", "x^2-2", "--mbeta", "x^2-2",
                       "--mgamma", "x-2")
    assert code == 0 and out.strip().endswith("YES")
    code, out, _ = run(capsys, "char0", "decide", "--malpha", "x^2-2", "--mbeta", "x^2-2",
                       "--mgamma", "x-3", "--json")
    assert code == 0 and json.loads(out)["decision"] is False


def test_eqsolve_and_nontrivial(capsys, tmp_path):
    path = tmp_path / "eq.json"
    path.write_text(EquationSpec.create("MultiUnknown", 3, 1, 1, 1, 2, (1, 2), (2, 1)).dumps())
    code, out, _ = run(capsys, "eqsolve", "--spec", str(path), "--json")
    data = json.loads(out)
    assert code == 0 and data["dimension"] == data["predicted"] == 11
    assert EquationSpec.from_json(data["equation"]).dumps() == path.read_text()
    path.write_text(EquationSpec.create("SingleUnknownWeighted", 3, 1, 1, 1, 2, (1, 1), (1, 1),
                                        ((1, 1), (1, 1))).dumps())
    code, out, _ = run(capsys, "nontrivial", "--spec", str(path))
    assert code == 0 and "consistent      True" in out


@pytest.mark.parametrize("argv", [
    ["field", "info", "-p", "4"],
    ["semihom", "biadd", "-p", "2", "-n", "2", "--alpha", "0", "--beta", "1"],
    ["semihom", "add", "-p", "2", "-n", "2", "--alpha", "b", "--beta", "1"],
    ["char0", "decide", "--malpha", "x^2-2x+1", "--mbeta", "x", "--mgamma", "x"],
    ["eqsolve", "--spec", "/nonexistent.json"],
    ["reproduce", "gf8"],
    ["semihom", "biadd", "-p", "2"],
    [],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err and not out
