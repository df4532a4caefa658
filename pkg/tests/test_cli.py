import json
import subprocess
import sys

import pytest

from srcover.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_table_layout(capsys):
    code, out, _ = run(capsys, "table", "--q", 2, "--m", 2, "--t", "6:10", "--R", "2:12:2")
    assert code == 0
    rows = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert rows[0] == "t\\R\t2\t4\t6\t8\t10\t12"
    assert rows[5].split("\t") == ["10", "2415919104", "16777216", "851968", "43264", "3328", "256"]
    assert any("t=10 R=8" in ln for ln in out.splitlines() if ln.startswith("# flag"))


def test_table_pretty(capsys):
    code, out, _ = run(capsys, "table", "--pretty")
    assert code == 0 and "851968" in out and "\t" not in out


def test_construct_radius_verify_round_trip(tmp_path, capsys):
    path = tmp_path / "lift.srk"
    code, out, _ = run(capsys, "construct", "--component", "rep:4:2", "--component", "rep:4:2", "--out", path)
    assert code == 0 and "claimed_radius=2" in out
    code, out, _ = run(capsys, "verify", "--code", path)
    assert code == 0 and "status=PASS" in out and "exact=2" in out
    first = out
    code, out, _ = run(capsys, "verify", "--code", path)
    assert out == first
    code, out, _ = run(capsys, "radius", "--code", path, "--method", "exhaustive")
    assert "exact=2" in out


def test_whole_space_radius_zero(tmp_path, capsys):
    path = tmp_path / "w.srk"
    assert run(capsys, "construct", "--kind", "whole", "--q", 2, "--m", 2, "--t", 2, "--out", path)[0] == 0
    code, out, _ = run(capsys, "radius", "--code", path, "--mode", "exact")
    assert code == 0 and "exact=0" in out


def test_verify_fail_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.srk"
    path.write_text("q=2 m=2 t=1 size=1 provenance=test claimed_radius=0 claim=asserted\n0,0;0,0\n")
    code, out, _ = run(capsys, "verify", "--code", path)
    assert code == 1 and "status=FAIL" in out and "witness=" in out


def test_probe_reproducible(tmp_path, capsys):
    path = tmp_path / "z.srk"
    run(capsys, "construct", "--kind", "zero", "--q", 2, "--m", 2, "--t", 3, "--out", path)
    a = run(capsys, "radius", "--code", path, "--mode", "probe", "--samples", 100, "--seed", 9)[1]
    b = run(capsys, "radius", "--code", path, "--mode", "probe", "--samples", 100, "--seed", 9)[1]
    assert a == b and "seed=9" in a


def test_census(tmp_path, capsys):
    path = tmp_path / "w1.srk"
    run(capsys, "construct", "--kind", "whole", "--q", 2, "--m", 2, "--t", 1, "--out", path)
    code, out, _ = run(capsys, "census", "--code", path, "--d", 1)
    assert code == 0 and "L_max=10" in out


def test_guard_refusal(tmp_path, capsys):
    path = tmp_path / "h.srk"
    run(capsys, "construct", "--component", "ham:3^2", "--component", "ham:3^2", "--out", path)
    code, _, err = run(capsys, "radius", "--code", path, "--method", "exhaustive")
    assert code == 3 and "error[E-GUARD]" in err
    code, out, _ = run(capsys, "radius", "--code", path)  # additive code: syndrome path fits
    assert code == 0 and "method=coset" in out


def test_bound_json(capsys):
    code, out, _ = run(capsys, "bound", "strong", "--q", 2, "--m", 2, "--t", 31, "--d", 9, "--e", 1, "--n", 5)
    assert code == 0 and json.loads(out)["value"] == str(2**104)
    code, out, _ = run(capsys, "bound", "product", "--q", 2, "--m", 2, "--t", 10, "--R", 8)
    assert json.loads(out)["extra"]["partition"] == ["4", "4"]


def test_bound_precondition_refused(capsys):
    code, _, err = run(capsys, "bound", "strong", "--q", 2, "--m", 2, "--t", 3, "--d", 9, "--e", 1, "--n", 5)
    assert code == 2 and "error[E-PRECONDITION]" in err
    code, _, err = run(capsys, "bound", "singleton", "--q", 2)
    assert code == 2 and "error[E-USAGE]" in err


def test_bound_discrepancies(capsys):
    code, out, _ = run(capsys, "bound", "discrepancies")
    assert code == 0 and len(out.strip().splitlines()) == 4


@pytest.mark.parametrize("name,args", [
    ("block-length", ["--q", 3, "--m", 1, "--r", 3, "--R", 4]),
    ("entropy", ["--q", 2, "--m", 2, "--rho", 0.25]),
    ("rm", ["--q", 2, "--m", 1, "--n", 2]),
    ("msrd-cap", ["--q", 3, "--m", 1, "--d", 9, "--variant", "odd"]),
    ("sphere", ["--q", 2, "--m", 2, "--t", 1, "--R", 1]),
    ("list", ["--q", 2, "--m", 2, "--t", 1, "--d", 1]),
    ("singleton", ["--q", 2, "--m", 2, "--t", 2, "--d", 3]),
])
def test_bound_kinds(capsys, name, args):
    code, out, _ = run(capsys, "bound", name, *args)
    assert code == 0 and all(json.loads(ln) for ln in out.splitlines())


def test_registry_validate(tmp_path, capsys):
    code, out, _ = run(capsys, "registry-validate")
    assert code == 0 and "issues=0" in out
    bad = tmp_path / "bad.tsv"
    bad.write_text("4\t5\t1\t10\tx\n4\t5\t2\t20\tx\n")
    code, out, _ = run(capsys, "registry-validate", bad)
    assert code == 0 and "monotonicity" in out
    empty = tmp_path / "empty.tsv"
    empty.write_text("")
    code, out, _ = run(capsys, "registry-validate", empty)
    assert code == 0 and "empty" in out
    broken = tmp_path / "broken.tsv"
    broken.write_text("4\tx\t1\t1\n")
    code, _, err = run(capsys, "registry-validate", broken)
    assert code == 2 and "error[E-REGISTRY]" in err and ":1:" in err


def test_usage_errors(tmp_path, capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "radius")[0] == 2
    code, _, err = run(capsys, "radius", "--code", tmp_path / "missing.srk")
    assert code == 2 and "E-FILE" in err
    code, _, err = run(capsys, "construct", "--component", "rep:4", "--out", tmp_path / "x.srk")
    assert code == 2 and "E-USAGE" in err


def test_force_warns(tmp_path, capsys):
    path = tmp_path / "w.srk"
    run(capsys, "construct", "--kind", "whole", "--q", 2, "--m", 2, "--t", 1, "--out", path)
    code, _, err = run(capsys, "radius", "--code", path, "--force")
    assert code == 0 and "WARNING" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "srcover", "bound", "discrepancies"], capture_output=True, text=True)
    assert res.returncode == 0 and "msrd-length-threshold" in res.stdout


def test_bound_strong_odd_q(capsys):
    code, out, _ = run(capsys, "bound", "strong", "--q", 3, "--m", 2, "--t", 9, "--n", 1)
    rep = json.loads(out)
    assert code == 0 and rep["value"] == str(3**12) and "WARNING" in rep["assumptions"][-1]
    assert run(capsys, "bound", "strong", "--q", 3, "--m", 2, "--t", 9, "--n", 1, "--d", 5)[0] == 2
