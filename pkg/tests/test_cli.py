from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from interp_mzv import cli, suites
from interp_mzv.suites import SuiteError, SuiteParams, instances, parse_prime_range, run_suite


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_g_example(capsys):
    code, out, _ = run(["eval", "g", "--index", "2", "--m", "1"], capsys)
    assert code == 0
    assert out == '{"index":[3],"coeff":{"coeffs":["1/1","1/1"]}}\n'


def test_eval_other_targets(capsys):
    assert run(["eval", "dual", "--index", "2,1,3"], capsys)[1] == '{"index":[1,3,2]}\n'
    assert run(["eval", "hoffman-dual", "--index", "2,1,3"], capsys)[1] == '{"index":[1,3,1,1]}\n'
    lines = run(["eval", "It", "--index", "1,1"], capsys)[1].splitlines()
    assert [json.loads(x)["index"] for x in lines] == [[1, 1], [2]]
    rec = json.loads(run(["eval", "zetaA", "--index", "1,2", "--p", "5"], capsys)[1])
    assert rec == {"index": [1, 2], "p": 5, "coeffs": [1]}
    rec = json.loads(run(["eval", "zeta", "--index", "1,2", "--trunc", "1000", "--t", "1"], capsys)[1])
    assert rec["t"] == "1/1" and abs(rec["value"] - 2.4041) < 1e-2


@pytest.mark.parametrize("argv", [
    ["check", "nope"],
    ["check", "fmzv-sum", "--primes", "20..10"],
    ["check", "claim", "--k-max", "-1"],
    ["check", "numeric-ohno", "--trunc", "5"],
    ["check", "claim", "--jobs", "0"],
    ["eval", "g", "--index", "2,0"],
    ["eval", "zeta", "--index", "2,1"],
    ["eval", "zetaA", "--index", "2"],
    ["eval", "zetaA", "--index", "2", "--p", "9"],
])
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:  # argparse rejects unknown choices itself
        code = exc.code
    assert code == 2


def test_check_passes_and_is_stable(capsys):
    argv = ["check", "gh-equality", "--max-weight", "4", "--max-m", "2", "--stable"]
    code, first, err = run(argv, capsys)
    assert code == 0 and "passed" in err
    _, second, _ = run(argv, capsys)
    _, parallel, _ = run(argv + ["--jobs", "2"], capsys)
    assert first == second == parallel
    recs = [json.loads(x) for x in first.splitlines()]
    assert all(r["pass"] and "time" not in r for r in recs)
    assert recs[0] == {"claim": "gh-equality", "k": [1], "m": 0, "pass": True}


def test_timing_present_without_stable(capsys):
    _, out, _ = run(["check", "claim", "--k-max", "4"], capsys)
    assert all("time" in json.loads(x) for x in out.splitlines())


def test_csv_output(capsys, tmp_path):
    target = tmp_path / "r.csv"
    code, out, _ = run(["check", "claim", "--k-max", "5", "--format", "csv", "--stable", "-o", str(target)], capsys)
    assert code == 0 and out == ""
    rows = list(csv.DictReader(io.StringIO(target.read_text())))
    assert len(rows) == 6
    assert rows[0]["claim"] == "claim" and rows[0]["pass"] == "true"
    assert json.loads(rows[0]["params"]) == {"k": 3, "r": 2}


def test_failure_exits_1_with_counterexample(capsys, monkeypatch):
    monkeypatch.setitem(suites.RUNNERS, "claim", lambda k, r: (r != 2, {"k": k, "r": r}))
    code, out, _ = run(["check", "claim", "--k-max", "4", "--stable"], capsys)
    assert code == 1
    recs = [json.loads(x) for x in out.splitlines()]
    bad = [r for r in recs if not r["pass"]]
    assert bad and all(r["counterexample"] == {"k": r["k"], "r": 2} for r in bad)


def test_suite_helpers():
    assert parse_prime_range("11..47") == (11, 47)
    assert parse_prime_range("13") == (13, 13)
    with pytest.raises(SuiteError):
        parse_prime_range("a..b")
    with pytest.raises(SuiteError):
        instances("bogus", SuiteParams())
    reps = list(run_suite("fmzv-ohno", SuiteParams(max_weight=2, max_m=1, primes=(11, 13))))
    assert reps and all(r.passed for r in reps)
    assert all(r.params["p"] > sum(r.params["k"]) + r.params["m"] + 2 for r in reps)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "interp_mzv", "eval", "G", "--index", "2", "--m", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"index":[3],"coeff":{"coeffs":["1/1","1/1"]}}\n'
