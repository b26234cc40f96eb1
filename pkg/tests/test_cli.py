import csv
import io
import json
import os
import subprocess
import sys

import pytest

from cornergap import cli
from cornergap.formulas import m_G


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.setenv(cli.WORKERS_ENV, "1")


def counts(out):
    rows = json.loads(out)
    return {r["method"]: r["count"] for r in rows}


def test_count_g_all_methods(capsys):
    code, out, _ = run(capsys, "count", "--region", "G", "--n", "2", "--x", "0", "--method", "all", "--format", "json")
    assert code == 0
    c = counts(out)
    assert c["oracle"] == c["formula"] == "3"
    assert c["agree"] == "yes"


def test_count_f_single_dent(capsys):
    code, out, _ = run(capsys, "count", "--region", "F", "--n", "1", "--x", "5", "--i", "1", "--format", "json")
    assert code == 0
    assert counts(out)["oracle"] == "1"


def test_count_e_adjacent_dents(capsys):
    code, out, _ = run(capsys, "count", "--region", "E", "--n", "4", "--x", "1", "--i", "1", "--j", "2", "--format", "json")
    assert code == 0
    c = counts(out)
    assert c["oracle"] == c["lgv"] == c["formula"] == "0"


def test_count_gapped_methods(capsys):
    code, out, _ = run(capsys, "count", "--region", "DGap", "--n", "5", "--x", "1", "--R", "2", "--v", "2", "--format", "json")
    assert code == 0
    c = counts(out)
    assert "formula" not in c
    assert c["oracle"] == c["lgv"] == c["laplace"]


def test_count_plain_and_csv(capsys):
    code, out, _ = run(capsys, "count", "--region", "G", "--n", "3", "--x", "1", "--method", "formula")
    assert code == 0 and out.splitlines()[0].split() == ["region", "method", "count"]
    code, out, _ = run(capsys, "count", "--region", "G", "--n", "3", "--x", "1", "--method", "formula", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["count"] == str(m_G(3, 1))


def test_cap_exceeded(capsys):
    code, _, err = run(capsys, "count", "--region", "G", "--n", "8", "--x", "5", "--method", "oracle")
    assert code == 2 and "cap" in err
    code, _, _ = run(capsys, "count", "--region", "G", "--n", "3", "--x", "1", "--method", "oracle", "--max-cells", "10")
    assert code == 2


def test_invalid_spec(capsys):
    code, _, err = run(capsys, "count", "--region", "F", "--n", "2", "--x", "1", "--i", "5")
    assert code == 2 and err.startswith("error:")


def test_region_file_roundtrip(capsys, tmp_path):
    path = tmp_path / "e.region"
    code, _, _ = run(capsys, "count", "--region", "E", "--n", "4", "--x", "1", "--i", "1", "--j", "3",
                     "--emit-region", "--out", str(path))
    assert code == 0 and path.read_text().startswith("#")
    code, out, _ = run(capsys, "count", "--region-file", str(path), "--method", "oracle", "--format", "json")
    direct = cli.main(["count", "--region", "E", "--n", "4", "--x", "1", "--i", "1", "--j", "3",
                       "--method", "oracle", "--format", "json"])
    expected, _ = capsys.readouterr()
    assert code == direct == 0
    assert counts(out)["oracle"] == counts(expected)["oracle"]


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "moments", "--k-max", "5", "--r-max", "60"],
    ["verify", "--suite", "doublesum", "--r-max", "12", "--v-max", "12"],
    ["verify", "--suite", "products", "--n-max", "4", "--x-max", "2"],
    ["verify", "--suite", "prop31", "--n-max", "3", "--x-max", "1"],
    ["verify", "--suite", "kuo", "--n-max", "5", "--x-max", "2"],
    ["verify", "--suite", "images", "--r-max", "8", "--v-max", "8"],
    ["verify", "--suite", "gap", "--n-max", "4"],
    ["verify", "--suite", "master", "--r-max", "10", "--v-max", "10"],
    ["verify", "--suite", "expansion", "--samples", "20"],
])
def test_verify_suites_pass(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert rows[-1]["case"].startswith("total") and rows[-1]["result"] == "pass"
    assert all(r["result"] == "pass" for r in rows)


def test_verify_reports_failures(capsys, monkeypatch):
    monkeypatch.setattr(cli, "_case_moments", lambda case: case != (1, 2))
    code, out, _ = run(capsys, "verify", "--suite", "moments", "--k-max", "2", "--r-max", "3",
                       "--failures-only", "--format", "json")
    rows = json.loads(out)
    assert code == 1
    assert rows[0] == {"suite": "moments", "case": "1 2", "result": "FAIL"}
    assert rows[-1]["result"] == "FAIL 1"


def test_verify_failures_only_when_clean(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "moments", "--k-max", "1", "--r-max", "2", "--failures-only")
    assert code == 0 and len(out.splitlines()) == 2


@pytest.mark.parametrize("R, v, exact", [(1, 2, "11"), (3, 3, "42")])
def test_correlate_values(capsys, R, v, exact):
    code, out, _ = run(capsys, "correlate", "--R", str(R), "--v", str(v), "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["exact"] == exact == d["double_sum"]
    assert "asymptotic" in d


def test_correlate_boundary(capsys):
    code, out, err = run(capsys, "correlate", "--R", "3", "--v", "2", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["exact"] == "0"
    assert "asymptotic" not in d
    assert "warning" in err


def test_json_idempotent(capsys):
    _, out, _ = run(capsys, "correlate", "--R", "4", "--v", "5", "--n", "20", "--format", "json")
    assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out


def test_converge(capsys):
    code, out, _ = run(capsys, "converge", "--n", "10", "50", "200", "--format", "json")
    errs = [r["rel_error"] for r in json.loads(out)]
    assert code == 0 and errs == sorted(errs, reverse=True)
    code, out, _ = run(capsys, "converge", "--pair", "3", "4", "--n", "100", "--format", "json")
    assert json.loads(out)[0]["limit"] == "11"


def test_asymptote(capsys):
    code, out, _ = run(capsys, "asymptote", "--points", "300,300", "300,400", "300,600", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and all(r["within_tol"] for r in rows)
    code, _, _ = run(capsys, "asymptote", "--points", "30,40", "--tol", "1e-9")
    assert code == 1


def test_nonpositive_tolerance_rejected(capsys):
    with pytest.raises(SystemExit):
        cli.main(["asymptote", "--tol", "0"])


def test_out_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "correlate", "--R", "1", "--v", "2", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["exact"] == "11"


def test_output_is_deterministic_across_workers():
    argv = [sys.executable, "-m", "cornergap", "verify", "--suite", "doublesum", "--r-max", "6", "--v-max", "6"]
    outputs = []
    for workers in ("1", "3"):
        env = dict(os.environ, CORNERGAP_WORKERS=workers)
        outputs.append(subprocess.run(argv, capture_output=True, env=env, check=True).stdout)
    assert outputs[0] == outputs[1]
