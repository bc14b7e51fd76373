import json

import pytest

from usets import cli
from usets.verify import CheckResult, VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_group_uset(capsys):
    code, out, _ = run(capsys, "group", "uset", "PSL(2,11)")
    assert code == 0
    assert out == "{1, 55, 120, 220, 264}"


def test_group_uset_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "group", "uset", "A5")
    assert code == 0
    assert json.loads(out) == {"name": "A5", "U": [1, 15, 20, 24]}


def test_group_info_json_round_trips(capsys):
    code, out, _ = run(capsys, "--format", "json", "group", "info", "PSL(2,7)")
    payload = json.loads(out)
    assert code == 0
    assert payload["order"] == 168
    assert payload["degree"] == 8
    assert payload["U"] == [1, 21, 42, 48, 56]


def test_group_classes(capsys):
    code, out, _ = run(capsys, "--format", "json", "group", "classes", "A5")
    rows = json.loads(out)["classes"]
    assert code == 0
    assert [r["size"] for r in rows] == [1, 12, 12, 15, 20]


def test_group_accepts_alias(capsys):
    code, out, _ = run(capsys, "group", "uset", "L2(11)")
    assert code == 0
    assert out == "{1, 55, 120, 220, 264}"


def test_catalog_list_k3(capsys):
    code, out, _ = run(capsys, "--format", "json", "catalog", "list", "--k", "3")
    names = [g["name"] for g in json.loads(out)["groups"]]
    assert code == 0
    assert len(names) == 11 and "U4(2)" in names and "M11" not in names


def test_catalog_list_max_order(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--max-order", "200")
    assert code == 0
    assert set(out.split()) >= {"A5", "PSL(2,4)", "PSL(2,5)", "PSL(2,7)"}


def test_search_finds_unique_group(capsys):
    code, out, _ = run(capsys, "--format", "json",
                       "search", "--uset", "1,55,120,220,264")
    payload = json.loads(out)
    assert code == 0
    assert payload["matches"] == ["PSL(2,11)"]
    assert payload["skipped"] == ["A10"]  # above the default cap


def test_pattern_instantiate(capsys):
    code, out, _ = run(capsys, "pattern", "instantiate",
                       "--pattern", "1,rq,8pq,4qr,8pr", "--assign", "p=3,q=5,r=11")
    assert code == 0
    assert out == "{1, 55, 120, 220, 264}"


def test_pattern_instantiate_warns_on_duplicates(capsys):
    code, out, _ = run(capsys, "pattern", "instantiate",
                       "--pattern", "pq,qr", "--assign", "p=7,q=5,r=7")
    assert code == 0
    assert "warning" in out and "35" in out


def test_pattern_match(capsys):
    code, out, _ = run(capsys, "pattern", "match",
                       "--pattern", "1,rq,8pq,4qr,8pr",
                       "--target", "1,55,120,220,264", "--bound", "100")
    assert code == 0
    assert out == "p=3 q=5 r=11"


def test_pattern_match_no_result(capsys):
    code, out, _ = run(capsys, "pattern", "match",
                       "--pattern", "1,rq,8pq,4qr,8pr",
                       "--target", "1,21,42,48,56")
    assert code == 0
    assert out == "no assignment matches"


def test_solve_psl2(capsys):
    assert run(capsys, "solve-psl2", "660")[1] == "11"
    assert run(capsys, "solve-psl2", "661")[1] == "none"


def test_verify_selected_checks(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "paper",
                       "--only", "uset:A5,psl2-order-solve",
                       "--report", str(path))
    assert code == 0
    assert out.count("PASS") == 2
    saved = json.loads(path.read_text())
    assert saved["summary"] == {"pass": 2, "fail": 0, "not_checked": 0}


def test_verify_json_output(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "paper",
                       "--only", "uset:PSL(2,11)")
    payload = json.loads(out)
    assert code == 0
    assert payload["results"][0]["status"] == "pass"


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    failing = VerificationReport(version="x", timestamp="t", results=[
        CheckResult("c", "claim", "fail", computed=1, expected=2)])
    monkeypatch.setattr(cli, "run_verification", lambda *a, **k: failing)
    code, out, _ = run(capsys, "verify", "paper")
    assert code == 1
    assert "FAIL" in out


def test_unknown_group_is_a_usage_error(capsys):
    code, _, err = run(capsys, "group", "uset", "M24")
    assert code == 2
    assert "unknown group" in err


def test_unknown_check_id_is_a_usage_error(capsys):
    code, _, err = run(capsys, "verify", "paper", "--only", "bogus")
    assert code == 2
    assert "bogus" in err


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_bad_assignment_is_a_usage_error(capsys):
    code, _, err = run(capsys, "pattern", "instantiate",
                       "--pattern", "rq", "--assign", "z=4")
    assert code == 2
    assert "bad assignment" in err


def test_bad_target_is_a_usage_error(capsys):
    code, _, err = run(capsys, "search", "--uset", "1,foo")
    assert code == 2
    assert "comma-separated integers" in err


def test_threads_flag_accepted(capsys):
    code, out, _ = run(capsys, "--threads", "4", "solve-psl2", "660")
    assert code == 0 and out == "11"


@pytest.mark.parametrize("argv", [
    ("group", "info", "A5"),
    ("group", "uset", "A5"),
    ("group", "classes", "A5"),
    ("catalog", "list"),
    ("search", "--uset", "1,15,20,24"),
    ("pattern", "instantiate", "--pattern", "1,rq", "--assign", "q=3,r=5"),
    ("pattern", "match", "--pattern", "1,rq", "--target", "1,15", "--bound", "10"),
    ("solve-psl2", "60"),
    ("verify", "paper", "--only", "psl2-order-solve"),
])
def test_every_subcommand_emits_valid_json(capsys, argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    assert code == 0
    assert isinstance(json.loads(out), dict)
