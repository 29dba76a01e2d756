"""Command-line interface: formats, determinism, exit codes, schemas."""

import io
import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from nesthilb import cli, verify

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


def run_cli(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def test_integrate_both_routes_agree():
    code, text = run_cli(
        ["integrate", "--surface", "p2", "--bundle", "O",
         "--n1", "1", "--n2", "0", "--route", "both"]
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["agreement"] is True
    assert {r["route"] for r in payload["records"]} == {"nested", "product"}
    assert all(r["value"] == {"num": "9", "den": "1"} for r in payload["records"])


def test_integrate_trivial_case():
    code, text = run_cli(
        ["integrate", "--surface", "p2", "--n1", "0", "--n2", "0"]
    )
    assert code == 0
    assert json.loads(text)["records"][0]["value"] == {"num": "1", "den": "1"}


def test_integrate_output_validates_against_schema():
    _, text = run_cli(
        ["integrate", "--surface", "p1xp1", "--bundle", "K",
         "--n1", "1", "--n2", "1", "--route", "both"]
    )
    schema = json.loads((SCHEMAS / "integrate_output.schema.json").read_text())
    jsonschema.validate(json.loads(text), schema)


def test_series_output_validates_against_schema():
    _, text = run_cli(
        ["series", "--surface", "p2", "--cap", "2", "--compare", "closed-form"]
    )
    schema = json.loads((SCHEMAS / "series_output.schema.json").read_text())
    jsonschema.validate(json.loads(text), schema)


def test_series_cap_zero():
    code, text = run_cli(["series", "--surface", "p2", "--cap", "0"])
    assert code == 0
    rows = json.loads(text)["rows"]
    assert rows == [{"n1": 0, "n2": 0, "value": {"num": "1", "den": "1"}}]


def test_series_compare_all_match():
    code, text = run_cli(
        ["series", "--surface", "p2", "--bundle", "O", "--cap", "2",
         "--compare", "closed-form"]
    )
    assert code == 0
    assert all(row["match"] for row in json.loads(text)["rows"])


def test_csv_and_json_carry_identical_numbers():
    _, json_text = run_cli(["series", "--surface", "p2", "--cap", "2"])
    _, csv_text = run_cli(["series", "--surface", "p2", "--cap", "2",
                           "--format", "csv"])
    rows = json.loads(json_text)["rows"]
    lines = csv_text.strip().splitlines()[1:]
    assert len(lines) == len(rows)
    for row, line in zip(rows, lines):
        n1, n2, num, den = line.split(",")
        assert (int(n1), int(n2)) == (row["n1"], row["n2"])
        assert {"num": num, "den": den} == row["value"]


def test_fixed_seed_is_byte_identical():
    argv = ["integrate", "--surface", "p2", "--bundle", "O(1)",
            "--n1", "2", "--n2", "1", "--seed", "5"]
    assert run_cli(argv) == run_cli(argv)


def test_different_seeds_same_value():
    values = set()
    for seed in ("1", "2"):
        _, text = run_cli(
            ["integrate", "--surface", "p2", "--bundle", "O(1)",
             "--n1", "2", "--n2", "1", "--seed", seed]
        )
        record = json.loads(text)["records"][0]
        values.add((record["value"]["num"], record["value"]["den"]))
    assert len(values) == 1


def test_seed_env_var_default(monkeypatch):
    monkeypatch.setenv(cli.DEFAULT_SEED_ENV, "9")
    _, from_env = run_cli(["integrate", "--surface", "p2", "--n1", "1", "--n2", "0"])
    monkeypatch.delenv(cli.DEFAULT_SEED_ENV)
    _, explicit = run_cli(
        ["integrate", "--surface", "p2", "--n1", "1", "--n2", "0", "--seed", "9"]
    )
    assert from_env == explicit


def test_config_file_surface(tmp_path):
    path = tmp_path / "surface.yaml"
    path.write_text(
        "name: quadric\nrays: [[1,0],[0,1],[-1,0],[0,-1]]\n"
        "bundles:\n  ruling: [1, 0, 0, 0]\n"
    )
    code, text = run_cli(
        ["integrate", "--surface", str(path), "--bundle", "ruling",
         "--n1", "1", "--n2", "0"]
    )
    assert code == 0
    assert json.loads(text)["records"][0]["surface"] == "quadric"


def test_empty_nesting_range_is_usage_error():
    code, _ = run_cli(["integrate", "--surface", "p2", "--n1", "1", "--n2", "2"])
    assert code == 2


def test_unknown_surface_is_usage_error():
    code, _ = run_cli(["integrate", "--surface", "wat", "--n1", "0", "--n2", "0"])
    assert code == 2


def test_bad_bundle_is_usage_error():
    code, _ = run_cli(
        ["integrate", "--surface", "p2", "--bundle", "nope", "--n1", "0", "--n2", "0"]
    )
    assert code == 2


def test_unknown_suite_is_usage_error():
    with pytest.raises(SystemExit) as err:
        cli.main(["verify", "nonsense"], out=io.StringIO())
    assert err.value.code == 2


def test_verify_suite_passes():
    code, text = run_cli(["verify", "oracle", "--cap", "2"])
    assert code == 0
    assert "oracle: pass" in text
    assert "FAIL" not in text


def test_verify_failure_exits_one(monkeypatch):
    def broken(cap=None, seed=0, jobs=1):
        return [verify.Check("synthetic failure", False, "details here")]

    monkeypatch.setitem(verify._SUITE_FUNCS, "gottsche", broken)
    code, text = run_cli(["verify", "gottsche"])
    assert code == 1
    assert "FAIL synthetic failure: details here" in text


def test_console_script_entry_point():
    env = dict(os.environ)
    proc = subprocess.run(
        [sys.executable, "-m", "nesthilb.cli", "integrate", "--surface", "p2",
         "--n1", "1", "--n2", "0"],
        capture_output=True, text=True, env=env,
        cwd=str(Path(__file__).resolve().parent.parent),
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["records"][0]["value"]["num"] == "9"
