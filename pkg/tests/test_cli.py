import runpy
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from varietas.cli.app import main, run
from varietas.cli.checks import dual_check, koszul_check, parse_basis, timed
from varietas.cli.report import CheckRecord, RunReport, render_value
from varietas.cli.suite import SuiteConfig, SuiteRunner, load_suite, run_suite
from varietas.core.errors import InputError
from varietas.engine.presentation import named_variety


# ── Reports ──────────────────────────────────────────────────────────────────

def test_render_value():
    assert render_value(True) == "yes"
    assert render_value(Fraction(1, 60)) == "1/60"
    assert render_value([1, 2, 4]) == "1 2 4"


def test_text_and_kv_rendering():
    report = RunReport("varietas dim as3")
    report.add(CheckRecord("dim:as3", "1 2 4 1 1", True, inputs={"max_degree": 5}))
    report.add(CheckRecord("dim:as4", "1 2 4", False))
    text = report.render()
    assert text.splitlines() == [
        "$ varietas dim as3",
        "[PASS] dim:as3: 1 2 4 1 1",
        "    max_degree: 5",
        "[FAIL] dim:as4: 1 2 4",
        "1/2 checks passed",
    ]
    kv = report.render("kv")
    assert 'check=dim:as3 verdict="1 2 4 1 1" passed=yes max_degree=5' in kv
    assert kv.rstrip().endswith("overall=fail")
    assert report.exit_code == 1


def test_timings_only_on_request():
    report = RunReport("x", [CheckRecord("c", "ok", True, elapsed_ms=12.34)])
    assert "elapsed_ms" not in report.render()
    assert "elapsed_ms: 12.3" in report.render(timings=True)


def test_timed_turns_library_errors_into_failed_records():
    def broken():
        raise InputError("no such thing")
    record = timed("broken", broken)
    assert not record.passed
    assert record.verdict == "error"
    assert record.values["error"] == "no such thing"


# ── Checks ───────────────────────────────────────────────────────────────────

def test_koszul_check_reports_both_orders():
    v = named_variety("associative")
    record = koszul_check(v, v, 4, ["0", "0", "0", "0"])
    assert record.passed
    assert record.values["reverse_residual"] == ["0", "0", "0", "0"]


def test_dual_check_against_expected():
    record = dual_check(named_variety("as3"), ["abc", "acb", "bac", "bca"], named_variety("dual-as3"))
    assert record.passed
    assert record.verdict == "equal"


def test_parse_basis_wants_single_monomials():
    with pytest.raises(InputError):
        parse_basis(["abc + bac"], named_variety("as3"))


# ── Command line ─────────────────────────────────────────────────────────────

def test_dim_prints_the_dimensions(capsys):
    assert main(["dim", "as3", "--max-degree", "5", "--expect", "1 2 4 1 1"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] dim:as3: 1 2 4 1 1" in out
    assert out.startswith("$ varietas dim as3")


def test_wrong_expectation_exits_one(capsys):
    assert main(["dim", "as3", "--max-degree", "3", "--expect", "1 2 5"]) == 1
    assert "[FAIL]" in capsys.readouterr().out


def test_unknown_variety_exits_two(capsys):
    assert main(["dim", "no-such-variety"]) == 2
    assert "no-such-variety" in capsys.readouterr().err


def test_zero_denominator_exits_two(capsys):
    assert main(["check", "as3", "abc + bac - bca - 1/0 cba"]) == 2
    assert "zero denominator" in capsys.readouterr().err


def test_bad_arguments_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["dim"])
    assert info.value.code == 2


def test_console_script_and_module_entry_point(monkeypatch, capsys):
    root = Path(__file__).resolve().parent.parent
    assert 'varietas = "varietas.cli.app:main"' in (root / "pyproject.toml").read_text()
    monkeypatch.setattr(sys, "argv", ["varietas", "dim", "as1", "--max-degree", "2"])
    with pytest.raises(SystemExit) as info:
        runpy.run_module("varietas", run_name="__main__")
    assert info.value.code == 0
    assert "[PASS] dim:as1: 1 2" in capsys.readouterr().out


def test_fixture_paths_and_kv_output(fixtures_dir, capsys):
    path = str(fixtures_dir / "as3.var")
    assert main(["koszul", "associative", "associative", "-N", "4", "--format", "kv"]) == 0
    assert "overall=pass" in capsys.readouterr().out
    assert main(["dim", path, "--max-degree", "4", "--format", "kv"]) == 0
    assert 'verdict="1 2 4 1"' in capsys.readouterr().out


def test_output_file(tmp_path):
    target = tmp_path / "report.txt"
    assert main(["s3-decomp", "--output", str(target)]) == 0
    text = target.read_text()
    assert "[PASS] s3-decomposition: direct sum" in text
    assert "orbit_dims: 1 1 2 2" in text


def test_check_with_certificate(capsys):
    assert main(["check", "as3", "dabc + dbac - dbca - dcba", "--certificate"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] check:as3: holds" in out
    assert "certificate:" in out


def test_derived_membership(fixtures_dir):
    report, _ = run(["derived", "as3", "--sign", "minus", "--identity", "[[[a,b],c],d]"])
    assert report.passed
    report, _ = run([
        "derived", "as3", "--sign", "minus", "--degree", "4",
        "--generators", str(fixtures_dir / "lie-nilp4.ids"),
    ])
    assert report.records[0].verdict == "equal"


def test_expand_check_verbs():
    report, _ = run(["expand-check", "associative", "x>(y<z) - (x>y)<z", "--kind", "derivation"])
    assert report.passed
    report, _ = run(["expand-check", "associative", "(a>=b)<=c - a>=(b<=c)", "--kind", "rota_baxter"])
    assert report.passed
    report, _ = run(["expand-check", "as1", "--kind", "star"])
    assert report.passed


def test_expand_check_needs_an_identity():
    assert main(["expand-check", "associative", "--kind", "derivation"]) == 2


def test_polarize_and_opposite_verbs():
    report, _ = run(["polarize", "as3", "--convention", "standard"])
    assert report.records[0].values["depolarizes"] is True
    report, _ = run(["opposite", "as3"])
    assert report.records[0].verdict == "op-as3"
    report, _ = run(["opposite", "as3", "--compare", "as4", "--max-degree", "4"])
    assert report.passed


def test_threads_flag_overrides_settings(fresh_settings):
    from varietas.core.config import get_settings
    run(["dim", "as2", "--max-degree", "3", "--threads", "3"])
    assert get_settings().threads == 3


# ── Suite ────────────────────────────────────────────────────────────────────

def test_load_real_suite():
    root = Path(__file__).resolve().parent.parent
    config = load_suite(root / "config" / "paper_suite.yaml")
    assert [d.variety for d in config.duals] == ["as3", "as1", "as2", "as4"]
    assert config.koszul[0].expected == ["0", "0", "0", "0", "1/5"]
    assert config.koszul[0].discrepancy
    plus = {d.variety: d for d in config.derived if d.sign == "plus"}
    assert plus["as1"].expected == "equal"
    assert all(plus[v].expected == "strictly-contained" for v in ("as2", "as3", "as4"))
    assert [p.convention for p in config.polarization if p.source == "as3"] == ["paper", "standard"]
    assert config.properties.seed == 20240611
    assert [row.type for row in config.summary] == ["I", "II", "III", "IV"]


def test_malformed_suites(tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("dimensions: [{variety: as3, max_degree: 0}]\n")
    with pytest.raises(InputError):
        load_suite(bad)
    bad.write_text("dimensions: [unclosed\n")
    with pytest.raises(InputError):
        load_suite(bad)
    with pytest.raises(InputError):
        load_suite(tmp_path / "missing.yaml")


def test_small_suite(tmp_path, fixtures_dir):
    suite = tmp_path / "config" / "suite.yaml"
    suite.parent.mkdir()
    suite.write_text(
        "dimensions:\n"
        "  - {variety: as3, max_degree: 4, expected: [1, 2, 4, 1]}\n"
        "  - {variety: dual-as3, max_degree: 5, slow: true}\n"
        "derived:\n"
        f"  - {{variety: as3, sign: minus, generators: {fixtures_dir / 'lie-nilp4.ids'}, max_degree: 3}}\n"
        "basis_counts:\n"
        f"  - {{name: lie, sign: minus, generators: {fixtures_dir / 'lie-jacobi.ids'}, expected: [2, 6]}}\n"
        "summary:\n"
        "  - {type: III, variety: as3, dual: dual-as3, commutator: nilpotent Lie, anticommutator: Jordan}\n"
    )
    report = run_suite(suite, quick=True)
    verdicts = {r.name: r.verdict for r in report.records}
    assert verdicts["dim:as3"] == "1 2 4 1"
    assert verdicts["dim:dual-as3"] == "skipped"
    assert verdicts["basis:lie"] == "2 6"
    summary = report.records[-1]
    assert summary.name == "summary:III"
    assert summary.values["koszul"] == "not run"
    assert summary.values["commutator"] == "nilpotent Lie (equal)"
    assert summary.values["discrepancies"] == "none"
    assert report.passed


def test_documented_discrepancy_passes_and_is_reported(tmp_path):
    ids = tmp_path / "anti.ids"
    ids.write_text("[a,b] + [b,a]\n")
    suite = tmp_path / "config" / "suite.yaml"
    suite.parent.mkdir()
    suite.write_text(
        "derived:\n"
        f"  - {{variety: associative, sign: minus, generators: {ids}, max_degree: 3,"
        " expected: strictly-contained, discrepancy: Jacobi left out}\n"
    )
    report = run_suite(suite)
    record = report.records[0]
    assert record.passed
    assert record.verdict == "strictly-contained"
    assert record.values["discrepancy"] == "Jacobi left out"
    assert report.discrepancies == [record]
    assert report.render().rstrip().endswith("1/1 checks passed, 1 against a documented discrepancy")
    assert report.exit_code == 0


def test_runner_accepts_an_empty_config(tmp_path):
    report = SuiteRunner(SuiteConfig(), tmp_path).run()
    assert report.records == []
    assert report.exit_code == 0

