"""Suite plumbing: configs, reports, determinism, budgets, exit codes."""

import json

import pytest

from glomega import StructureError, save_algebra, direct_sum_C
from glomega.suites import (
    SUITES,
    CheckRecord,
    Report,
    SuiteConfig,
    resolve_omega,
    run_suite,
)


def test_resolve_omega_builtins():
    assert resolve_omega("C").dim == 1
    assert resolve_omega("c").dim == 1
    assert resolve_omega("C^3").dim == 3
    assert resolve_omega("C2").dim == 2
    assert resolve_omega("null(2)").dim == 2
    assert resolve_omega("mat(2)").dim == 4
    assert resolve_omega("nonassoc").dim == 2


def test_resolve_omega_file(tmp_path):
    path = str(tmp_path / "table.json")
    save_algebra(direct_sum_C(2), path)
    assert resolve_omega(path).dim == 2
    with pytest.raises(StructureError):
        resolve_omega(str(tmp_path / "missing.json"))


def test_config_validation():
    with pytest.raises(StructureError):
        SuiteConfig(suite="bogus")
    with pytest.raises(StructureError):
        SuiteConfig(suite="pbw", n_min=3, n_max=2)
    with pytest.raises(StructureError):
        SuiteConfig(suite="pbw", d=5, n_max=4)
    with pytest.raises(StructureError):
        SuiteConfig(suite="pbw", s_values=())
    cfg = SuiteConfig(suite="pbw", s_values=(0, 1))
    assert all(hasattr(s, "denominator") for s in cfg.s_values)


def test_report_summary_and_exit_codes():
    cfg = SuiteConfig(suite="pbw")
    ok = Report(cfg, [CheckRecord("a", "x", "pass"), CheckRecord("b", "y", "skipped")])
    assert ok.summary == {"pass": 1, "fail": 0, "skipped": 1, "not-stabilized": 0}
    assert ok.exit_code() == 0
    bad = Report(cfg, [CheckRecord("a", "x", "fail", "w")])
    assert bad.exit_code() == 1
    unstable = Report(cfg, [CheckRecord("a", "x", "not-stabilized")])
    assert unstable.exit_code() == 1
    with pytest.raises(StructureError):
        Report(cfg, [CheckRecord("a", "x", "wat")])


def test_report_records_sorted_and_serializable():
    cfg = SuiteConfig(suite="pbw")
    rep = Report(cfg, [CheckRecord("b", "y", "pass", seconds=0.5), CheckRecord("a", "z", "pass")])
    assert [r.name for r in rep.records] == ["a", "b"]
    data = rep.to_dict()
    json.dumps(data)  # JSON-compatible
    assert data["version"]
    assert data["suite"] == "pbw"
    assert len(data["fingerprint"]) == 64
    assert all("seconds" in r for r in data["records"])


def test_fingerprint_ignores_wall_times():
    cfg = SuiteConfig(suite="pbw")
    r1 = Report(cfg, [CheckRecord("a", "x", "pass", seconds=0.1)])
    r2 = Report(cfg, [CheckRecord("a", "x", "pass", seconds=9.9)])
    assert r1.fingerprint() == r2.fingerprint()
    r3 = Report(cfg, [CheckRecord("a", "x", "fail", "w")])
    assert r3.fingerprint() != r1.fingerprint()


def test_run_suite_deterministic():
    cfg = SuiteConfig(suite="current", n_max=3, max_len=2)
    rep1 = run_suite(cfg)
    rep2 = run_suite(cfg)
    assert rep1.fingerprint() == rep2.fingerprint()
    assert rep1.exit_code() == 0


def test_run_suite_rejects_nonassociative_table_outside_double():
    with pytest.raises(StructureError):
        run_suite(SuiteConfig(suite="projection", omega="nonassoc", n_max=3))


def test_double_suite_accepts_nonassociative_witness():
    rep = run_suite(SuiteConfig(suite="double", omega="nonassoc", n_max=3, max_len=2))
    by_name = {}
    for r in rep.records:
        by_name.setdefault(r.name, []).append(r.status)
    assert "fail" in by_name["double.assoc"]
    assert "fail" in by_name["double.jacobi"]
    assert by_name["double.pvdw"] == ["pass"]
    # skew and both Leibniz rules hold for any bilinear table
    assert by_name["double.skew"] == ["pass"]
    assert by_name["double.leibniz"] == ["pass"]
    assert rep.exit_code() == 1


def test_budget_exhaustion_recorded_as_skip():
    rep = run_suite(SuiteConfig(suite="projection", omega="mat(2)", n_max=3))
    skips = [r for r in rep.records if r.status == "skipped"]
    assert skips and all("budget" in r.witness for r in skips)
    assert rep.summary["fail"] == 0


def test_projection_anchor_runs_for_dim_one():
    rep = run_suite(SuiteConfig(suite="projection", omega="C", n_max=2, s_values=(0,)))
    names = {r.name for r in rep.records}
    assert "projection.anchor" in names
    assert rep.summary["fail"] == 0 and rep.summary["not-stabilized"] == 0


def test_all_is_last_suite_token():
    assert SUITES[-1] == "all"
    assert set(SUITES) > {"projection", "pbw", "double", "current"}


def test_human_summary_mentions_counts():
    rep = run_suite(SuiteConfig(suite="pbw", omega="C", n_max=3, max_len=2))
    text = rep.human_summary()
    assert "suite=pbw" in text
    assert "fingerprint=" in text
