"""End-to-end tests for the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from orthodontia.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_poly_double_grothendieck(runner):
    r = runner.invoke(main, ["poly", "double-grothendieck", "--w", "21"])
    assert r.exit_code == 0
    assert r.output.strip() == "y1 + x1 - x1*y1"


def test_poly_json_and_latex(runner):
    r = runner.invoke(main, ["poly", "schubert", "--w", "321", "--json"])
    assert r.exit_code == 0
    d = json.loads(r.output)
    assert d["terms"] == [{"x": [2, 1, 0], "y": [], "c": 1}]
    r = runner.invoke(main, ["poly", "schubert", "--w", "321", "--latex"])
    assert r.output.strip() == "x_1^{2} x_2"


def test_poly_lascoux_requires_alpha(runner):
    r = runner.invoke(main, ["poly", "lascoux", "--w", "21"])
    assert r.exit_code == 2
    assert "requires --alpha" in r.output


def test_poly_script_families(runner):
    r = runner.invoke(main, ["poly", "script-G", "--diagram", "n=2;1;"])
    assert r.exit_code == 0
    assert r.output.strip() == "y1 + x1 - x1*y1"
    r = runner.invoke(main, ["poly", "script-S", "--diagram", "n=2;1;"])
    assert r.output.strip() == "y1 + x1"


def test_poly_stable(runner):
    r = runner.invoke(main, ["poly", "stable-grothendieck", "--w", "21", "--nvars", "2"])
    assert r.exit_code == 0
    assert r.output.strip() == "x2 + x1 - x1*x2"


def test_pipedreams_count(runner):
    r = runner.invoke(main, ["pipedreams", "--w", "1423", "--count"])
    assert r.exit_code == 0
    assert r.output.strip() == "5"


def test_pipedreams_json_lines(runner):
    r = runner.invoke(main, ["pipedreams", "--w", "132", "--emit-json"])
    assert r.exit_code == 0
    lines = [json.loads(s) for s in r.output.strip().splitlines() if s.startswith("[")]
    assert [[1, 2]] in lines and [[2, 1]] in lines and [[1, 2], [2, 1]] in lines


def test_orthodontia_command(runner):
    r = runner.invoke(main, ["orthodontia", "--diagram", "n=5;1;1,3,4;;3;", "--json"])
    assert r.exit_code == 0
    d = json.loads(r.output)
    assert d["i"] == [2, 3, 1]
    assert d["j"] == [1, 1, 3]
    assert d["M"] == [[], [2], [4]]
    assert d["K"] == [[1], [], [], [], []]


def test_orthodontia_rejects_bad_diagram(runner):
    r = runner.invoke(main, ["orthodontia", "--diagram", "n=2;2;1"])
    assert r.exit_code == 2
    assert "%-avoiding" in r.output


def test_sortorder_command(runner):
    r = runner.invoke(main, ["sortorder", "--w", "68342751"])
    assert r.exit_code == 0
    assert "sigma(w) = 231" in r.output
    assert "w_sort = 68234751" in r.output


def test_verify_command(runner):
    r = runner.invoke(main, ["verify", "thm11", "--nmax", "3"])
    assert r.exit_code == 0
    assert "0 failed" in r.output


def test_verify_json(runner):
    r = runner.invoke(main, ["verify", "operators", "--nmax", "3", "--json"])
    assert r.exit_code == 0
    jsons = [json.loads(s) for s in r.output.splitlines() if s.startswith("{")]
    (body,) = [d for d in jsons if "summary" in d]
    assert body["summary"]["failed"] == 0
    assert body["counterexamples"] == []


def test_scan_command(runner):
    r = runner.invoke(main, ["scan", "conj15", "--n", "2", "--max-entry", "1", "--json"])
    assert r.exit_code == 0
    jsons = [json.loads(s) for s in r.output.splitlines() if s.startswith("{")]
    records = [d for d in jsons if "verdict" in d]
    (body,) = [d for d in jsons if "summary" in d]
    assert all(rec["verdict"] == "positive" for rec in records)
    assert body["summary"]["checked"] == len(records)


def test_scan_workers(runner):
    r = runner.invoke(main, ["scan", "conj14", "--n", "2", "--m", "2", "--workers", "2"])
    assert r.exit_code == 0
    assert "15 checked, 0 failed" in r.output


def test_check_thm12(runner):
    r = runner.invoke(main, ["check", "thm12", "--diagram", "n=3;1;1,2;", "--json"])
    assert r.exit_code == 0
    rec = json.loads(r.output)
    assert rec["verdict"] == "positive"


def test_check_thm12_inclusion_gate(runner):
    r = runner.invoke(main, ["check", "thm12", "--diagram", "n=2;1;2;"])
    assert r.exit_code == 2
    r = runner.invoke(
        main, ["check", "thm12", "--diagram", "n=2;1;2;", "--no-require-inclusion"]
    )
    assert r.exit_code == 0


def test_report_ambiguities(runner):
    r = runner.invoke(
        main, ["report", "ambiguities", "--nmax-omega", "3", "--nmax-endpoint", "3"]
    )
    assert r.exit_code == 0
    assert "Ambiguity resolution report" in r.output


def test_cache_env_persists_tables(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("ORTHODONTIA_CACHE_DIR", str(tmp_path))
    r = runner.invoke(main, ["poly", "double-grothendieck", "--w", "21"])
    assert r.exit_code == 0
    # atexit hook does not fire inside CliRunner; save explicitly
    from orthodontia import families

    families.save_caches()
    assert (tmp_path / "tables.json").is_file()
