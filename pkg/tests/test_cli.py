from __future__ import annotations

import json

from e6mod import cli


def test_usage_errors(capsys):
    assert cli.main([]) == cli.EXIT_USAGE
    assert cli.main(["thresholds", "--family", "adjoint"]) == cli.EXIT_USAGE
    assert cli.main(["thresholds", "--family", "natural", "--c", "x"]) == cli.EXIT_USAGE
    assert cli.main(["decompose", "--maxdeg", "13"]) == cli.EXIT_USAGE


def test_thresholds_natural(capsys, tmp_path):
    out = tmp_path / "r.json"
    code = cli.main(["thresholds", "--family", "natural", "--k", "2", "--c", "0", "--json", str(out)])
    assert code == cli.EXIT_OK
    text = capsys.readouterr().out
    assert "c = 0 is excluded" in text
    report = json.loads(out.read_text())
    assert report["summary"]["fail"] == 0
    names = [c["name"] for c in report["checks"]]
    assert names[0] == "highest weight" and "exclusion progressions" in names


def test_thresholds_trivial_flags_redundancy(capsys):
    report = cli.cmd_thresholds("trivial", 1)
    assert report["summary"]["corrected"] == 1 and report["summary"]["fail"] == 0


def test_thresholds_spin_reports_failures():
    report = cli.cmd_thresholds("spin4", 1)
    assert cli.exit_code(report) == cli.EXIT_FAIL


def test_decompose_small(capsys):
    assert cli.main(["decompose", "--maxdeg", "3"]) == cli.EXIT_OK
    assert "summary: 8 pass, 0 corrected, 0 fail" in capsys.readouterr().out


def test_flows_small(capsys):
    assert cli.main(["flows", "--samples", "5"]) == cli.EXIT_OK
    text = capsys.readouterr().out
    assert "[corrected] flow 8" in text and "summary: 13 pass, 3 corrected, 0 fail" in text


def test_report_shape():
    rep = cli.make_report("x", {"a": 1}, [{"name": "n", "status": "pass"}])
    assert rep == {"command": "x", "parameters": {"a": 1},
                   "checks": [{"name": "n", "status": "pass", "detail": ""}],
                   "summary": {"pass": 1, "fail": 0, "corrected": 0}}
