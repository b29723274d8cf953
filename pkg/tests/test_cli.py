import json
import shutil
import subprocess

import pytest

from skewideal.cli import main

from cases import FIXTURES

CCC = str(FIXTURES / "ccc_f4_x5.json")
M2 = str(FIXTURES / "m2f8.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_idempotent(capsys):
    code, out, err = run(capsys, "idempotent", CCC)
    assert code == 0 and not err
    lines = out.splitlines()
    assert "n = 5" in lines and "k = 3" in lines
    assert lines[2].startswith("e = z^3 (")
    for ok in ("e^2 = e: OK", "g(1-e) = 0: OK", "ideal equality: OK"):
        assert ok in lines


def test_distances_matrix(capsys):
    code, out, _ = run(capsys, "distances", M2, "--max-j", "2")
    assert code == 0
    assert "column distances: d^c_0 = 1, d^c_1 = 3, d^c_2 = 4" in out
    assert "d^r_0 = 4" in out
    assert "d_free = 4 (sandwich)" in out


def test_distances_json(capsys):
    code, out, _ = run(capsys, "distances", CCC, "--output", "json")
    assert code == 0
    data = json.loads(out)
    assert data["column_distances"] == [3, 4, 5]
    assert data["free_distance"] == {"value": 5, "certificate": "MDS"}


def test_other_commands(capsys):
    code, out, _ = run(capsys, "check-algebra", CCC)
    assert code == 0 and "sigma orbits: (0) (1 2)" in out
    code, out, _ = run(capsys, "separability", CCC)
    assert code == 0 and out.startswith("strategy: orbit-lift")
    code, out, _ = run(capsys, "parity-check", CCC)
    assert code == 0 and "M(f) =" in out
    code, out, _ = run(capsys, "info", CCC)
    assert code == 0 and "basic: yes" in out and "invariant factors: 1, 1, 1" in out


def test_strategy_override(capsys):
    code, out, _ = run(capsys, "separability", M2, "--strategy", "orbit-lift")
    assert code == 0 and "strategy: orbit-lift" in out
    code, _, err = run(capsys, "separability", M2, "--strategy", "matrix-units")
    assert code == 2 and "not invariant" in err


def test_not_an_ideal_code(capsys):
    code, out, err = run(capsys, "idempotent", str(FIXTURES / "nonbasic.json"))
    assert code == 1
    assert not out
    assert err.strip() == "Smith form not basic: invariant factor z + 1 at position 2"


def test_validation_failures(capsys, tmp_path):
    code, _, err = run(capsys, "info", str(tmp_path / "missing.json"))
    assert code == 2 and err.startswith("error:")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"field": {"p": 2}, "algebra": {"type": "quotient", "modulus": [1, 1]},
                               "generators": []}))
    code, _, err = run(capsys, "info", str(bad))
    assert code == 2 and "generators must be nonempty" in err
    code, _, err = run(capsys, "separability", str(FIXTURES / "swap_derivation_f2xf2.json"))
    assert code == 2 and "delta" in err


def test_deterministic_output(capsys):
    first = run(capsys, "idempotent", M2)[1]
    assert run(capsys, "idempotent", M2)[1] == first


@pytest.mark.skipif(shutil.which("skewideal") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["skewideal", "idempotent", str(FIXTURES / "nonbasic.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "position 2" in proc.stderr
