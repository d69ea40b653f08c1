"""Report assembly, JSON determinism, and the command line contract."""

import json

import pytest

from lgorbit import cli, report
from lgorbit.errors import PreconditionError
from lgorbit.report import CheckResult, Config, load_config, render_json, run

EXPECTED_ASSUMPTIONS = {
    "compactification.symplectic-patching",
    "mirror.cited-classification-inputs",
    "quiver.connecting-map-injectivity",
}


def test_full_run_passes():
    rep = run("all", Config())
    assert not rep.failed
    counts = rep.counts
    assert counts["fail"] == 0
    assert counts["assumption"] == 3
    assert sum(counts.values()) >= 55


def test_assumptions_are_exactly_the_named_three():
    rep = run("all", Config())
    got = {r.id for r in rep.results if r.status == "assumption"}
    assert got == EXPECTED_ASSUMPTIONS


def test_every_result_is_well_formed():
    rep = run("all", Config())
    ids = [r.id for r in rep.results]
    assert len(ids) == len(set(ids))
    for r in rep.results:
        assert r.status in ("pass", "fail", "assumption")
        assert r.anchor.startswith("claim:")
        assert r.detail


def test_tables_present_on_full_run():
    rep = run("all", Config())
    assert "fukaya_hom" in rep.tables
    assert "f2_ext" in rep.tables
    assert "singular_value_scan" in rep.tables
    assert rep.tables["fukaya_hom"]["hom(L0,L1)"] == {"0": 1, "1": 1}
    assert rep.tables["f2_ext"]["ext(O,O)"] == [1, 0, 0]
    scan = rep.tables["singular_value_scan"]
    assert all(row["agrees"] for row in scan)


def test_json_rendering_deterministic():
    a = render_json(run("all", Config()))
    b = render_json(run("all", Config()))
    assert a == b
    payload = json.loads(a)
    assert payload["schema"] == 1
    assert payload["suite"] == "all"


def test_single_suite_run():
    rep = run("lie", Config())
    assert all(r.id.startswith("lie.") for r in rep.results)
    assert not rep.failed


def test_unknown_suite_rejected():
    with pytest.raises(PreconditionError):
        run("algebra", Config())


def test_load_config_overrides(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text('{"seed": 5, "t_range": 4}')
    cfg = load_config(str(path), {"seed": 9})
    assert cfg.seed == 9
    assert cfg.t_range == 4
    assert cfg.sphere_samples == 1000


def test_load_config_rejects_unknown_key(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text('{"speed": 5}')
    with pytest.raises(PreconditionError):
        load_config(str(path), {})


def test_load_config_rejects_wrong_type(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text('{"seed": "fast"}')
    with pytest.raises(PreconditionError):
        load_config(str(path), {})


def test_cli_exit_zero_and_output(capsys):
    assert cli.main(["lie"]) == 0
    out = capsys.readouterr().out
    assert "lie.critical-set" in out
    assert "0 failed" in out


def test_cli_writes_identical_json(tmp_path, capsys):
    f1 = tmp_path / "a.json"
    f2 = tmp_path / "b.json"
    assert cli.main(["all", "--json", str(f1)]) == 0
    assert cli.main(["all", "--json", str(f2)]) == 0
    capsys.readouterr()
    assert f1.read_bytes() == f2.read_bytes()


def test_cli_flag_overrides_reach_report(tmp_path, capsys):
    f = tmp_path / "r.json"
    assert cli.main(["mirror", "--seed", "3", "--t-range", "4", "--json", str(f)]) == 0
    capsys.readouterr()
    payload = json.loads(f.read_text())
    assert payload["config"]["seed"] == 3
    assert payload["config"]["t_range"] == 4


def test_cli_rejects_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        cli.main(["algebra"])
    assert exc.value.code == 2


def test_cli_config_errors_exit_two(tmp_path, capsys):
    missing = tmp_path / "absent.json"
    assert cli.main(["lie", "--config", str(missing)]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"speed": 1}')
    assert cli.main(["lie", "--config", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "config error" in err


def test_cli_reports_failures_with_exit_one(monkeypatch, capsys):
    def failing_suite(cfg):
        rows = [CheckResult("lie.broken", "claim:control", "fail", "forced")]
        return rows, {}

    monkeypatch.setitem(report.SUITES, "lie", failing_suite)
    assert cli.main(["lie"]) == 1
    out = capsys.readouterr().out
    assert "1 failed" in out
