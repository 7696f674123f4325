import json

import pytest

from stablepieces import cli, verify
from stablepieces.git_locus import CheckResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_pieces_json(capsys):
    code, out = run(capsys, "pieces", "--type", "A1", "--auto", "id", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["type"] == "A1"
    assert [p["id"] for p in obj["pieces"]] == ["J={1};w=e", "J={};w=e", "J={};w=s1"]


def test_piece_ids_round_trip_through_closure(capsys):
    code, out = run(capsys, "pieces", "--type", "A2", "--auto", "1:2,2:1")
    assert code == 0
    for piece in json.loads(out)["pieces"]:
        code, out2 = run(
            capsys, "closure", "--type", "A2", "--auto", "1:2,2:1", "--piece", piece["id"]
        )
        assert code == 0
        assert piece["id"] in json.loads(out2)["closure"]


def test_nilcone_table(capsys):
    code, out = run(
        capsys, "nilcone", "--type", "A2", "--auto", "id", "--lambda", "1,2", "--format", "table"
    )
    assert code == 0
    assert "J={};w=s1" in out
    assert "w=e" not in out  # identity pieces are never in a cone


def test_poset_dot(capsys):
    code, out = run(capsys, "poset", "--type", "A1", "--auto", "id", "--format", "dot")
    assert code == 0
    assert out.startswith('digraph "closure_poset_A1_id"')
    assert '"J={};w=e" -> "J={1};w=e";' in out


def test_semistable_and_common_nilcone(capsys):
    code, out = run(capsys, "semistable", "--type", "A2", "--auto", "id")
    assert code == 0
    assert len(json.loads(out)["pieces"]) == 4
    code, out = run(capsys, "common-nilcone", "--type", "A1", "--auto", "id")
    assert code == 0
    assert json.loads(out)["pieces"] == ["J={};w=s1"]


def test_strata(capsys):
    code, out = run(capsys, "strata", "--type", "A1")
    assert code == 0
    obj = json.loads(out)
    assert [s["piece"] for s in obj["strata"]] == ["J={};w=e", "J={1};w=e"]


def test_verify_single_config(capsys):
    code, out = run(
        capsys, "verify", "--type", "A2", "--auto", "1:2,2:1", "--suite", "all",
        "--format", "json",
    )
    assert code == 0
    assert all(entry["pass"] for entry in json.loads(out))


def test_oracle_pgl2(capsys):
    code, out = run(capsys, "oracle-pgl2", "--samples", "200", "--seed", "42")
    assert code == 0
    obj = json.loads(out)
    assert obj["samples"] == 200 and obj["seed"] == 42
    assert all(c["pass"] for c in obj["checks"])
    assert all(c["counterexample"] is None for c in obj["checks"])


@pytest.mark.parametrize(
    "argv",
    [
        ["pieces", "--type", "Z9"],
        ["pieces", "--type", "B2", "--auto", "1:2,2:1"],
        ["nilcone", "--type", "A2", "--lambda", "1"],
        ["nilcone", "--type", "A2", "--auto", "1:2,2:1", "--lambda", "1,2"],
        ["strata", "--type", "A2", "--auto", "1:2,2:1"],
        ["closure", "--type", "A1", "--piece", "garbage"],
        ["no-such-command"],
        ["pieces"],
    ],
)
def test_usage_and_validation_errors_exit_1(capsys, argv):
    assert cli.main(argv) == 1
    capsys.readouterr()


def test_check_failure_exits_2(capsys, monkeypatch):
    failing = [("A1", "id", CheckResult(name="forced", passed=False, details="boom"))]
    monkeypatch.setattr(cli.verify, "run_configs", lambda *a, **k: failing)
    code, out = run(capsys, "verify", "--type", "A1", "--format", "table")
    assert code == 2
    assert "FAIL" in out


def test_guard_env_override(capsys, monkeypatch):
    monkeypatch.setenv(cli.GUARD_ENV_VAR, "5")
    assert cli.main(["pieces", "--type", "A3"]) == 1
    captured = capsys.readouterr()
    assert "guard" in captured.err
    monkeypatch.setenv(cli.GUARD_ENV_VAR, "not-a-number")
    assert cli.main(["pieces", "--type", "A1"]) == 1


def test_output_determinism(capsys):
    _, first = run(capsys, "pieces", "--type", "B2", "--auto", "id")
    _, second = run(capsys, "pieces", "--type", "B2", "--auto", "id")
    assert first == second
    _, v1 = run(capsys, "verify", "--type", "B2", "--suite", "git", "--format", "json")
    _, v2 = run(capsys, "verify", "--type", "B2", "--suite", "git", "--format", "json")
    assert v1 == v2


def test_registry_covers_every_emitted_check():
    results = verify.run_configs(
        [("A1", "id"), ("A2", "id"), ("A2", "1:2,2:1")], suite="all"
    )
    emitted = {verify.base_name(r.name) for _, _, r in results}
    registered = {name for names in verify.SUITE_CHECKS.values() for name in names}
    assert emitted == registered
