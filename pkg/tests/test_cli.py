import json

import pytest

from liework.cli import build_report, canonical_json, main
from liework.suites import CaseSpec, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_single_case_passes(capsys):
    code, out, _ = run(capsys, "verify", "--case", "A1:-")
    assert code == 0
    assert "PASS" in out
    assert "fail" not in out.split("PASS")[0].lower() or "fail=0" not in out


def test_verify_gated_case_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--case", "A2:1",
                       "--suite", "bc-hypotheses")
    assert code == 0
    assert "GATED bc-hypotheses A2:1" in out
    assert "outside" in out


def test_verify_strict_hypotheses_fails(capsys):
    code, out, _ = run(capsys, "verify", "--case", "A2:1",
                       "--suite", "bc-hypotheses", "--strict-hypotheses")
    assert code == 1
    assert "FAIL:" in out


def test_malformed_case_exit_two(capsys):
    code, out, _ = run(capsys, "verify", "--case", "Z9:frog")
    assert code == 2
    assert "Z9:frog" in out


def test_unknown_suite_usage_error(capsys):
    code = main(["verify", "--suite", "nonsense"])
    assert code == 2


def test_missing_subcommand_usage_error():
    assert main([]) == 2


def test_dossier_table(capsys):
    code, out, _ = run(capsys, "dossier", "--case", "A2:1")
    assert code == 0
    assert "dim p            6" in out
    assert "dim C            2" in out
    assert "torus rank       1" in out
    assert "leaf dim         4" in out


def test_richardson_certificate_output(capsys):
    code, out, _ = run(capsys, "richardson", "--case", "B2:1")
    assert code == 0
    assert "tangent dim      3 of 3" in out
    assert "free" in out and "generating" in out


def test_json_report_written(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--case", "A1:-", "--case", "A1:1",
                     "--suite", "algebra", "--suite", "richardson-torsor",
                     "--json", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["tool_version"]
    assert doc["summary"]["total"] == "4"
    assert doc["summary"]["pass"] == "4"
    assert doc["cases"] == ["A1:-", "A1:1"]
    statuses = {(r["suite"], r["case"]): r["status"] for r in doc["suites"]}
    assert statuses[("algebra", "A1:-")] == "pass"
    for r in doc["suites"]:
        for c in r["checks"]:
            assert set(c) == {"name", "expected", "actual", "ok", "witness"}


def test_json_round_trip_byte_identical(tmp_path, capsys):
    path = tmp_path / "report.json"
    run(capsys, "verify", "--case", "B2:2", "--suite", "parabolic-identities",
        "--json", str(path))
    raw = path.read_text()
    assert canonical_json(json.loads(raw)) == raw


def test_two_runs_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--case", "A2:2", "--suite", "uc-family",
            "--suite", "bc-hypotheses"]
    assert main(argv + ["--json", str(a)]) == 0
    assert main(argv + ["--json", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_seed_flag_changes_report(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["verify", "--case", "A1:-", "--suite", "algebra",
          "--seed", "1", "--json", str(a)])
    main(["verify", "--case", "A1:-", "--suite", "algebra",
          "--seed", "2", "--json", str(b)])
    capsys.readouterr()
    assert json.loads(a.read_text())["seed"] == "1"
    assert json.loads(b.read_text())["seed"] == "2"


def test_workbench_seed_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("WORKBENCH_SEED", "77")
    path = tmp_path / "r.json"
    main(["verify", "--case", "A1:-", "--suite", "algebra",
          "--json", str(path)])
    capsys.readouterr()
    assert json.loads(path.read_text())["seed"] == "77"


def test_workbench_seed_invalid(capsys, monkeypatch):
    monkeypatch.setenv("WORKBENCH_SEED", "frog")
    code = main(["verify", "--case", "A1:-", "--suite", "algebra"])
    capsys.readouterr()
    assert code == 2


def test_report_summary_matches_tally():
    results = run_suite("bc-hypotheses",
                        [CaseSpec.from_string("A2:-"),
                         CaseSpec.from_string("A2:1")])
    doc = build_report(results, seed=5, max_word_len=8)
    assert doc["summary"] == {"pass": "1", "fail": "0",
                              "hypothesis-gated": "1", "skipped": "0",
                              "total": "2"}


def test_rationals_serialize_as_strings(tmp_path, capsys):
    path = tmp_path / "r.json"
    run(capsys, "verify", "--case", "G2:1", "--suite", "richardson-torsor",
        "--json", str(path))
    raw = path.read_text()
    doc = json.loads(raw)
    for r in doc["suites"]:
        for c in r["checks"]:
            assert isinstance(c["expected"], str)
            assert isinstance(c["actual"], str)
    assert '"seed":"12648430"' in raw


def test_version_flag(capsys):
    code = main(["--version"])
    out = capsys.readouterr().out
    assert code == 0
    assert "liework" in out
