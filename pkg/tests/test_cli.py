import json

import pytest

from rmramp.cli import main
from rmramp.schemas import (HIERARCHY_SCHEMA, PROFILE_SCHEMA,
                            SIMULATION_SCHEMA, TABLE_SCHEMA, validate)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rghw_single_and_explain(capsys):
    code, out, _ = run_cli(capsys, "rghw", "--q", "5", "--s", "2",
                           "--u1", "5", "--u2", "3", "--m", "8", "--explain")
    assert code == 0
    assert "14" in out and "(3,1)" in out and "11" in out and "17" in out


def test_rghw_all_json(capsys):
    code, out, _ = run_cli(capsys, "rghw", "--q", "5", "--s", "2", "--u1", "3",
                           "--u2", "2", "--all", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["weights"] == [10, 14, 17, 19]
    assert payload["ell"] == 4


def test_ghw_examples(capsys):
    code, out, _ = run_cli(capsys, "ghw", "--q", "16", "--s", "7",
                           "--u", "90", "--r", "1000", "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == 1515
    code, out, _ = run_cli(capsys, "ghw", "--q", "5", "--s", "2", "--u", "6",
                           "--all", "--format", "json")
    assert json.loads(out)["weights"][:3] == [3, 4, 5]


def test_veca_trace(capsys):
    code, out, _ = run_cli(capsys, "veca", "--q", "7", "--a", "20", "--b", "22",
                           "--s", "7", "--m", "34", "--explain",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["element"] == [1, 0, 0, 1, 6, 6, 6]
    assert payload["counts"] == [23415, 1936, 65, 1, 4, 10, 19]


def test_rho_command(capsys):
    code, out, _ = run_cli(capsys, "rho", "--q", "7", "--s", "6",
                           "--a", "14", "--b", "16", "--format", "json")
    assert json.loads(out)["count"] == 23415


def test_profile_json_schema(capsys):
    code, out, _ = run_cli(capsys, "profile", "--q", "8", "--s", "2",
                           "--u1", "6", "--u2", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    validate(payload, PROFILE_SCHEMA)
    assert payload["t"] == [6, 12, 17, 21, 24, 26, 27]


def test_json_payloads_validate_against_shipped_schemas(capsys):
    _, out, _ = run_cli(capsys, "rghw", "--q", "5", "--s", "2", "--u1", "3",
                        "--u2", "2", "--all", "--format", "json")
    validate(json.loads(out), HIERARCHY_SCHEMA)
    _, out, _ = run_cli(capsys, "tables", "t7", "--format", "json")
    validate(json.loads(out), TABLE_SCHEMA)
    _, out, _ = run_cli(capsys, "simulate", "--q", "8", "--s", "2",
                        "--u1", "5", "--u2", "4", "--decoder", "A",
                        "--delta", "0", "--trials", "50", "--seed", "1",
                        "--format", "json")
    validate(json.loads(out), SIMULATION_SCHEMA)
    with pytest.raises(ValueError):
        validate({"q": 1}, PROFILE_SCHEMA)


def test_tables_list_and_golden_csv(capsys):
    code, out, _ = run_cli(capsys, "tables", "--list")
    ids = out.split()
    assert "t1" in ids and "t18" in ids and "fig1" in ids
    code, out, _ = run_cli(capsys, "tables", "t3", "--format", "csv")
    assert out.splitlines() == [
        "r=m,d_r,M_m", "1,5,5", "2,9,9", "3,10,12", "4,13,14", "5,14,15"]


def test_tables_t6_footnote(capsys):
    code, out, _ = run_cli(capsys, "tables", "t6")
    assert code == 0
    assert "45" in out and "136" in out
    assert "fail both checks" in out


def test_byte_identical_reruns(capsys):
    args = ("profile", "--q", "16", "--s", "2", "--u1", "9", "--u2", "8",
            "--format", "csv")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    args = ("simulate", "--q", "8", "--s", "2", "--u1", "5", "--u2", "4",
            "--decoder", "A", "--delta", "0.05", "--trials", "200",
            "--seed", "9", "--format", "json")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_oracle_modes(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--mode", "shadow", "--q", "5",
                           "--s", "2", "--lo", "4", "--hi", "4", "--m", "3",
                           "--format", "json")
    assert code == 0 and json.loads(out)["value"] == 12
    code, out, _ = run_cli(capsys, "oracle", "--mode", "profile", "--q", "3",
                           "--s", "2", "--u1", "2", "--u2", "1",
                           "--format", "json")
    payload = json.loads(out)
    assert payload["t"] == [2, 4, 5] and payload["r"] == [4, 5, 7]
    code, out, _ = run_cli(capsys, "oracle", "--mode", "support", "--q", "3",
                           "--s", "2", "--u1", "2", "--u2", "1", "--m", "1",
                           "--format", "json")
    assert json.loads(out)["value"] == 3


def test_shares_roundtrip(tmp_path, capsys):
    path = str(tmp_path / "shares.txt")
    code, _, _ = run_cli(capsys, "shares", "encode", "--q", "8", "--s", "2",
                         "--u1", "6", "--u2", "5",
                         "--secret", "1,2,3,4,5,6,7", "--seed", "42",
                         "--out", path)
    assert code == 0
    code, out, _ = run_cli(capsys, "shares", "reconstruct", "--in", path,
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["recovered"] is True and payload["secret"] == [1, 2, 3, 4, 5, 6, 7]
    code, out, _ = run_cli(capsys, "shares", "reconstruct", "--in", path,
                           "--positions", "0-5", "--format", "json")
    payload = json.loads(out)
    assert payload["recovered"] is False and payload["determined"] == 0
    code, out, _ = run_cli(capsys, "shares", "correct", "--in", path,
                           "--index", "7", "--decoder", "B", "--seed", "3",
                           "--format", "json")
    assert code == 0


def test_simulate_zero_delta(capsys):
    code, out, _ = run_cli(capsys, "simulate", "--q", "8", "--s", "2",
                           "--u1", "5", "--u2", "4", "--decoder", "A",
                           "--delta", "0", "--trials", "1000", "--seed", "0",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["failures"] == 0
    assert payload["single_symbol_leak"] is True


def test_exit_codes(capsys):
    code, _, err = run_cli(capsys, "rghw", "--q", "5", "--s", "2",
                           "--u1", "9", "--u2", "1", "--m", "1")
    assert code == 3 and "error" in err
    code, _, err = run_cli(capsys, "oracle", "--mode", "shadow", "--q", "5",
                           "--s", "2", "--lo", "0", "--hi", "8", "--m", "12",
                           "--budget", "3")
    assert code == 4
    with pytest.raises(SystemExit) as exc:
        main(["tables", "nosuch"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["rghw", "--q", "5"])
    assert exc.value.code == 2
