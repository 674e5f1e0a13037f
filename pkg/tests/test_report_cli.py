import json
import subprocess
import sys

import pytest

import syzcover.cli as cli
from syzcover.report import (
    CheckRecord,
    CoverReport,
    EngineInfo,
    ReportStats,
    emit_report,
    parse_json,
    parse_selection,
    render_json,
    render_text,
    run_verification,
)


@pytest.fixture(scope="module")
def report_p3():
    return run_verification(3)


def test_rejects_invalid_primes():
    for bad in (2, 4, 9, 1, -5):
        with pytest.raises(ValueError):
            run_verification(bad)


def test_selection_parsing():
    assert parse_selection("all") == ("lemmas", "cover", "fiber")
    assert parse_selection("fiber,lemmas") == ("lemmas", "fiber")
    with pytest.raises(ValueError):
        parse_selection("lemmas,bogus")


def test_overall_pass_and_check_order(report_p3):
    assert report_p3.overall == "pass"
    names = [c.name for c in report_p3.checks]
    assert names == [
        "catalog_syzygies",
        "kernel_relation",
        "alpha_isomorphism",
        "generator_independence",
        "transition_matrix",
        "base_change_matrices",
        "cocycle_compatibility",
        "chart_relations",
        "gluing_substitution",
        "section_ring_membership",
        "determinant_periodicity",
        "w0_specialization",
        "matrix_ideal_shift",
        "fiber_census",
        "component_structure",
        "genus_hurwitz",
    ]
    assert len(names) == len(set(names))


def test_empty_selection_reports_stats_only():
    report = run_verification(5, checks=())
    assert report.checks == ()
    assert report.overall == "pass"
    assert report.stats.genus_component == 1081


def test_census_skip_is_not_failure():
    report = run_verification(11, checks="fiber")
    statuses = {c.name: c.status for c in report.checks}
    assert statuses["fiber_census"] == "skipped"
    assert statuses["genus_hurwitz"] == "pass"
    assert report.overall == "pass"
    assert report.stats.total_fiber == 13200  # formula value still reported


def test_json_round_trip(report_p3):
    text = render_json(report_p3)
    parsed = parse_json(text)
    assert parsed == report_p3


def test_json_schema_keys(report_p3):
    data = json.loads(render_json(report_p3))
    assert set(data) == {"prime", "overall", "checks", "stats", "engine"}
    assert set(data["stats"]) == {
        "components",
        "total_fiber",
        "degree",
        "genus_base",
        "genus_component",
        "eta_field_degree",
        "fiber_field_degree",
    }
    assert set(data["engine"]) == {"version", "seed"}
    for check in data["checks"]:
        assert set(check) == {"name", "status", "detail"}
        assert check["status"] in ("pass", "fail", "skipped")


def test_reports_deterministic_for_fixed_seed():
    a = run_verification(3, seed=5)
    b = run_verification(3, seed=5)
    assert render_json(a) == render_json(b)


def test_emit_to_file(tmp_path, report_p3):
    dest = tmp_path / "report.json"
    text = emit_report(report_p3, "json", dest)
    assert dest.read_text(encoding="utf-8") == text
    with pytest.raises(ValueError):
        emit_report(report_p3, "yaml")


def test_text_format_mentions_every_check(report_p3):
    text = render_text(report_p3)
    for c in report_p3.checks:
        assert c.name in text
    assert "genus_component=49" in text


def _run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "syzcover", *args],
        capture_output=True,
        text=True,
    )


def test_cli_pass_exit_zero_and_byte_identical():
    first = _run_cli("verify", "--prime", "3", "--seed", "1")
    second = _run_cli("verify", "--prime", "3", "--seed", "1")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    data = json.loads(first.stdout)
    assert data["overall"] == "pass"
    assert data["engine"]["seed"] == 1


def test_cli_invalid_prime_exit_two():
    res = _run_cli("verify", "--prime", "9")
    assert res.returncode == 2
    assert "error" in res.stderr


def test_cli_bad_flag_exit_two():
    res = _run_cli("verify", "--prime", "3", "--format", "xml")
    assert res.returncode == 2


def test_cli_output_file(tmp_path):
    dest = tmp_path / "out.json"
    res = _run_cli("verify", "--prime", "3", "--checks", "lemmas", "--output", str(dest))
    assert res.returncode == 0
    assert res.stdout == ""
    data = json.loads(dest.read_text(encoding="utf-8"))
    assert [c["name"] for c in data["checks"]] == [
        "catalog_syzygies",
        "kernel_relation",
        "alpha_isomorphism",
        "generator_independence",
    ]


def test_cli_batch_mode():
    res = _run_cli("verify", "--primes", "3,5", "--checks", "lemmas", "--format", "json")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert [d["prime"] for d in data] == [3, 5]


def test_cli_exit_one_on_failed_check(monkeypatch):
    failed = CoverReport(
        prime=3,
        overall="fail",
        checks=(CheckRecord("catalog_syzygies", "fail", "forced failure"),),
        stats=ReportStats(2, 48, 24, 3, 49, 1, 4),
        engine=EngineInfo("0.0.0", 0),
    )
    monkeypatch.setattr(cli, "run_verification", lambda *a, **k: failed)
    assert cli.main(["verify", "--prime", "3", "--output", "/dev/null"]) == 1


def test_cli_max_field_size_forces_skip():
    res = _run_cli(
        "verify", "--prime", "5", "--checks", "fiber", "--max-field-size", "1000"
    )
    assert res.returncode == 0
    data = json.loads(res.stdout)
    statuses = {c["name"]: c["status"] for c in data["checks"]}
    assert statuses["fiber_census"] == "skipped"
