import csv
import io
import json
import subprocess
import sys

import pytest

from qparity.cli import RunConfig, UsageError, run


def call(*argv, env=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_enumerate_c2_7():
    code, out, _ = call("enumerate", "c2", "7")
    assert code == 0
    assert json.loads(out)["pairs"] == [{"j": 1, "parts": [6, 1]}, {"j": 1, "parts": [3, 3, 1]}]


def test_scan_c2():
    code, out, _ = call("scan", "c2", "--mod", "5", "--order", "2000")
    assert code == 0 and json.loads(out)["residues"] == [2]


def test_residues():
    code, out, _ = call("residues", "--alpha", "3", "--beta", "1", "--mod", "5")
    assert json.loads(out)["residues"] == [0, 2, 4]
    code, out, _ = call("residues", "--alpha", "1", "--beta", "1", "--mod", "5", "--delta", "2")
    assert json.loads(out)["residues"] == [0, 1, 3]


def test_coeffs_csv_header_and_rows():
    code, out, _ = call("coeffs", "c2", "--order", "7", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "value"]
    assert rows[-1] == ["7", "2"]


def test_coeffs_identity_sides():
    _, lhs, _ = call("coeffs", "gauss:lhs", "--order", "30")
    _, rhs, _ = call("coeffs", "gauss:rhs", "--order", "30")
    assert lhs == rhs
    _, mod2, _ = call("coeffs", "gauss", "--order", "30", "--mod2")
    assert {json.loads(line)["value"] for line in mod2.splitlines()} <= {0, 1}


def test_csv_and_json_carry_the_same_data():
    _, j, _ = call("coeffs", "c9", "--order", "40")
    _, c, _ = call("coeffs", "c9", "--order", "40", "--format", "csv")
    from_json = [(r["n"], r["value"]) for r in map(json.loads, j.splitlines())]
    from_csv = [(int(a), int(b)) for a, b in list(csv.reader(io.StringIO(c)))[1:]]
    assert from_json == from_csv


def test_verify_identity_and_theorem():
    code, out, _ = call("verify", "identity", "slater.eq18", "--order", "300")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = call("verify", "theorem", "T-c1", "--order", "500")
    assert code == 0
    code, out, _ = call("verify", "theorem", "T-c12", "--order", "500")
    rep = json.loads(out)
    assert code == 1 and rep["status"] == "fail" and rep["first_failure"] == 1


def test_verify_all_exit_is_and_of_reports():
    code, out, _ = call("verify", "--all", "--order", "300", "--no-timing")
    reports = [json.loads(line) for line in out.splitlines()]
    assert len(reports) > 30
    assert (code == 0) == all(r["status"] == "pass" for r in reports)
    assert all(set(r) == {"id", "order", "status", "first_failure", "elapsed_ms"} for r in reports)


def test_output_is_byte_stable():
    a = call("verify", "--all", "--order", "200", "--no-timing")
    b = call("verify", "--all", "--order", "200", "--no-timing", "--jobs", "3")
    assert a == b
    assert call("coeffs", "c5", "--order", "100") == call("coeffs", "c5", "--order", "100")


def test_pretty_aggregates():
    code, out, _ = call("verify", "--all", "--order", "100", "--pretty", "--no-timing")
    doc = json.loads(out)
    assert doc["passed"] + doc["failed"] == len(doc["reports"])


@pytest.mark.parametrize("argv", [
    ["verify", "theorem", "T-c99"],
    ["verify", "identity", "nope"],
    ["scan", "c42", "--mod", "5"],
    ["enumerate", "zz", "3"],
    ["coeffs", "nonsense"],
])
def test_unknown_id_is_usage_error(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert "known:" in err


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["coeffs", "c1", "--order", "0"],
    ["scan", "c2"],
    ["enumerate", "c1", "70"],
    ["enumerate", "c1", "5", "--format", "xml"],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_env_defaults_and_flag_precedence(monkeypatch):
    monkeypatch.setenv("QPARITY_ORDER", "12")
    monkeypatch.setenv("QPARITY_FORMAT", "csv")
    _, out, _ = call("coeffs", "c1")
    assert out.splitlines()[0] == "n,value" and len(out.splitlines()) == 14
    _, out, _ = call("coeffs", "c1", "--order", "5", "--format", "json")
    assert len(out.splitlines()) == 6
    monkeypatch.setenv("QPARITY_ORDER", "abc")
    assert call("coeffs", "c1")[0] == 2


def test_run_config_invariants():
    with pytest.raises(UsageError):
        RunConfig(order=0)
    with pytest.raises(UsageError):
        RunConfig(order=50, oracle_bound=60)
    assert RunConfig(order=50, oracle_bound=50).order == 50


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qparity", "enumerate", "c9", "11", "--format", "text"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert len(res.stdout.splitlines()) == 9
