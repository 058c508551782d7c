import json

import pytest

from sact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_genus10_all(capsys):
    code, out, _ = run(capsys, "classify", "--genus", "10", "--all", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["complete"]
    rows = payload["rows"]
    assert len(rows) == 6
    assert [r["group"] for r in rows] == ["A4", "A4", "A5", "A6", "S4", "S4"]


def test_classify_deterministic(capsys):
    a = run(capsys, "classify", "--genus", "11", "--all")
    b = run(capsys, "classify", "--genus", "11", "--all")
    assert a == b
    assert a[0] == 0


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "--genus", "10", "--group", "A5",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "group,signature,data_set,factor_sigma,factor_tau"
    assert len(lines) == 2


def test_classify_cache_roundtrip(tmp_path, capsys):
    args = ["classify", "--genus", "10", "--group", "S4",
            "--cache-dir", str(tmp_path), "--format", "json"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    code3, out3, _ = run(capsys, "cache", "info", "--cache-dir", str(tmp_path),
                         "--format", "json")
    assert code3 == 0
    assert len(json.loads(out3)["entries"]) == 1
    code4, out4, _ = run(capsys, "cache", "clear", "--cache-dir", str(tmp_path),
                         "--format", "json")
    assert json.loads(out4)["removed"] == 1


def test_classify_budget_exhaustion_exit_code(capsys):
    code, out, _ = run(capsys, "classify", "--genus", "10", "--group", "A5",
                       "--budget-nodes", "3")
    assert code == 3
    assert "incomplete" in out


def test_weakgen_yes_and_genus_mismatch(capsys):
    code, out, _ = run(capsys, "weakgen", "--group", "A5",
                       "--df", "(3,7;-)", "--dg", "(5,3;(1,5)^[2],(4,5)^[2])",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "yes"
    assert payload["factor_sigma"] == "(3,7;-)"

    code, _, err = run(capsys, "weakgen", "--group", "A5",
                       "--df", "(3,7;-)", "--dg", "(5,3;-)")
    assert code == 2
    assert "genus" in err


def test_weakgen_no(capsys):
    code, out, _ = run(capsys, "weakgen", "--group", "S4",
                       "--df", "(2,0;(1,2)^[22])",
                       "--dg", "(4,1;(1,4)^[3],(3,4)^[3])", "--format", "json")
    assert code == 0
    assert json.loads(out)["verdict"] == "no"


def test_factor_command(capsys):
    code, out, _ = run(capsys, "factor", "--group", "A5",
                       "--ds", "(5,0;[(1 2)(3 4),2;2,2]^[2],[(1 5 4 3 2),5;5],"
                               "[(1 2 3 4 5),5;5])",
                       "--element", "(1 2 3 4 5)", "--format", "json")
    assert code == 0
    assert json.loads(out)["factor"] == "(5,3;(1,5)^[2],(4,5)^[2])"


def test_factor_standard(capsys):
    code, out, _ = run(capsys, "factor", "--group", "A5",
                       "--ds", "(5,0;[(1 2)(3 4),2;2,2]^[2],[(1 5 4 3 2),5;5],"
                               "[(1 2 3 4 5),5;5])", "--standard", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["factor_sigma"] == "(3,7;-)"


def test_lift_command(capsys):
    code, out, _ = run(capsys, "lift", "--group", "A4",
                       "--ds", "(4,1;[(1 2)(3 4),2;2,2]^[2])",
                       "--d", "(2,1;-)", "--pi", "()", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "alt_times_c2"
    assert payload["normalized_perm"] == "(1 2)"


def test_free_command(capsys):
    code, out, _ = run(capsys, "free", "--n", "5", "--genus", "121",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == 2 and payload["extension"] == "free_sym"


def test_obstructions_command(capsys):
    code, out, _ = run(capsys, "obstructions", "--group", "A5", "--genus", "10",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["clean"] and payload["classes_swept"] == 1


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "factor", "--group", "A5", "--ds", "garbage",
                       "--standard")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "classify", "--genus", "10")
    assert code == 2


def test_env_override(capsys, monkeypatch):
    monkeypatch.setenv("SACT_FORMAT", "json")
    code, out, _ = run(capsys, "free", "--n", "5", "--genus", "100")
    assert code == 0
    assert json.loads(out)["status"] == "no_free_action"


def test_jobs_flag_is_deterministic(capsys):
    a = run(capsys, "classify", "--genus", "10", "--all", "--jobs", "2")
    b = run(capsys, "classify", "--genus", "10", "--all", "--jobs", "1")
    assert a == b
