import json

import pytest

from dpdelta.cli import main
from dpdelta.model import model_to_dict
from dpdelta.rational import parse_rational


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_list_degree_counts(capsys):
    code, out = run(capsys, "list", "--degree", "6")
    assert code == 0
    assert len(out.strip().splitlines()) - 1 == 6  # header + rows
    code, out = run(capsys, "list", "--degree", "4")
    assert len(out.strip().splitlines()) - 1 == 16
    code, out = run(capsys, "list")
    assert len(out.strip().splitlines()) - 1 == 34


def test_compute_global(capsys):
    code, out = run(capsys, "compute", "dp8-F2")
    assert code == 0
    assert out.startswith("3/4 (exact)")


def test_compute_point(capsys):
    code, out = run(capsys, "compute", "dp6-A1A2", "--point", "E3")
    assert code == 0
    assert out.strip() == "1/2 (exact)"


def test_compute_unknown_model(capsys):
    assert main(["compute", "nonexistent"]) == 2
    assert main(["compute", "dp8-F2", "--point", "nope"]) == 2


def test_dump_profile(capsys):
    code, out = run(capsys, "dump-profile", "dp8-F1", "s")
    assert code == 0
    assert "tau = 2" in out and "S = 7/6" in out
    assert "(8) + (-2)v + (-1)v^2" in out
    assert main(["dump-profile", "dp8-F1", "nope"]) == 2


def test_dump_profile_empty_support(capsys):
    code, out = run(capsys, "dump-profile", "dp4-smooth-blowup", "EP")
    assert code == 0
    assert "(empty)" in out


def test_json_round_trip(capsys):
    code, out = run(capsys, "compute", "dp5-A4", "--format", "json")
    data = json.loads(out)
    assert parse_rational(data["lower"]) == parse_rational("3/7")
    assert data["exact"] is True
    code, out = run(capsys, "table", "--degree", "8", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 3
    for row in rows:
        parse_rational(row["degree"])


def test_deterministic_output(capsys):
    _, first = run(capsys, "table", "--degree", "5")
    _, second = run(capsys, "table", "--degree", "5")
    assert first == second


def test_verify_exit_code_with_perturbed_catalog(tmp_path, capsys, by_name):
    data = model_to_dict(by_name["dp6-A2"])
    i = by_name["dp6-A2"].curve_index("E2")
    j = by_name["dp6-A2"].curve_index("E3")
    data["gram"][i][j] = "0"
    data["gram"][j][i] = "0"
    path = tmp_path / "perturbed.json"
    path.write_text(json.dumps([data]))
    code, out = run(capsys, "--catalog", str(path), "verify")
    assert code == 1
    assert "FAIL" in out


def test_verify_clean_subset_catalog(tmp_path, capsys, by_name):
    models = [by_name["dp8-F1"], by_name["dp8-F2"], by_name["dp8-P1xP1"]]
    path = tmp_path / "deg8.json"
    path.write_text(json.dumps([model_to_dict(m) for m in models]))
    code, out = run(capsys, "--catalog", str(path), "verify")
    assert code == 0
    assert "0 fail" in out


def test_catalog_env_var(tmp_path, capsys, monkeypatch, by_name):
    path = tmp_path / "one.json"
    path.write_text(json.dumps([model_to_dict(by_name["dp8-F1"])]))
    monkeypatch.setenv("DELTA_CATALOG", str(path))
    code, out = run(capsys, "list")
    assert code == 0
    assert "dp8-F1" in out and "dp6-A1" not in out


def test_verify_json(capsys):
    code, out = run(capsys, "verify", "--format", "json")
    data = json.loads(out)
    assert {"rows", "counts", "ok"} <= set(data)
    assert data["rows"] and all("status" in r and "model" in r for r in data["rows"])
    for r in data["rows"]:
        assert r["status"] in {"PASS", "FAIL", "ERRATUM"}
