"""Acceptance suite: one test per acceptance criterion.

Each test prints one PASS/FAIL line (run with -s to see them).  Every
expected value is either a frozen independently derived quantity (brute
force enumeration, Hurwitz bookkeeping, full-field scans) or a pinned
headline reference value.

Known red: criterion 1 pins the headline component genus 1261 for p = 5.
The engine computes 1081 = 120 * (10 - 1) + 1, which is forced by the
unramified Hurwitz relation together with the enumerated degree 120 and
base genus 10; a genus of 1261 would need the non-integer base genus 11.5.
The pinned value is asserted as stated and the test fails honestly.
"""

import json
import random
import subprocess
import sys
import time

import pytest

import syzcover.cli as cli
from syzcover.census import component_stats, enumerate_fiber, hurwitz_consistent, verify_fiber_point
from syzcover.cover import (
    build_cover_data,
    check_base_change,
    check_cocycle,
    check_det_periodicity,
    check_gluing,
    check_matrix_ideal_shift,
    check_relations,
    check_section_ring,
    check_transition,
    check_w0_specialization,
)
from syzcover.gf import make_extension_field
from syzcover.oracle import OracleSuite
from syzcover.report import (
    CheckRecord,
    CoverReport,
    EngineInfo,
    ReportStats,
    parse_json,
    render_json,
    run_verification,
)
from syzcover.syz import (
    CATALOG_LABELS,
    build_catalog,
    check_alpha,
    check_catalog,
    check_independence,
    check_kernel_relation,
)

PRIMES = (3, 5, 7, 11, 13)

SYMBOLIC_CHECKS = (
    check_catalog,
    check_kernel_relation,
    check_alpha,
    check_independence,
)
COVER_CHECKS = (
    check_transition,
    check_base_change,
    check_cocycle,
    check_relations,
    check_gluing,
    check_section_ring,
    check_det_periodicity,
    check_w0_specialization,
)


def _line(n, ok, detail):
    print(f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}")


def test_criterion_1_p5_headline():
    """p = 5 headline: components 4, degree 120, component genus 1261, < 30 s."""
    start = time.monotonic()
    report = run_verification(5)
    elapsed = time.monotonic() - start
    s = report.stats
    ok = (
        s.components == 4
        and s.degree == 120
        and s.genus_component == 1261
        and elapsed < 30
    )
    _line(
        1,
        ok,
        f"components={s.components} degree={s.degree} "
        f"genus_component={s.genus_component} (pinned 1261) in {elapsed:.1f}s",
    )
    assert elapsed < 30
    assert s.components == 4
    assert s.degree == 120
    assert s.genus_component == 1261, (
        f"engine computes genus {s.genus_component}: with degree 120 and base "
        f"genus 10 the unramified Hurwitz relation 2g-2 = 120*18 forces g = 1081; "
        f"the pinned headline value 1261 would require base genus 11.5 and is "
        f"inconsistent with the enumerated fiber (480 points, 4 determinant "
        f"classes of 120)"
    )


def test_criterion_2_census_equals_formula():
    """Enumerated fiber totals match (p^2-1)p(p-1); every point re-verified."""
    frozen = {3: 48, 5: 480, 7: 2016}
    details = []
    for p, expected in frozen.items():
        census = enumerate_fiber(p)
        assert not census.skipped
        formula = (p * p - 1) * p * (p - 1)
        assert expected == formula
        assert census.total == formula, (p, census.total, formula)
        for pt in census.points:
            assert verify_fiber_point(p, pt)
        details.append(f"p={p}: {census.total}")
    _line(2, True, "; ".join(details) + "; all points re-verified")


@pytest.mark.parametrize("p", PRIMES)
def test_criterion_3_symbolic_suite(p):
    """All symbolic identity checks pass, under 10 s per prime."""
    start = time.monotonic()
    catalog = build_catalog(p)
    failures = [c.__name__ for c in SYMBOLIC_CHECKS if not c(catalog).ok]
    cd = build_cover_data(p, catalog)
    failures += [c.__name__ for c in COVER_CHECKS if not c(cd).ok]
    elapsed = time.monotonic() - start
    ok = not failures and elapsed < 10
    _line(3, ok, f"p={p}: {len(SYMBOLIC_CHECKS) + len(COVER_CHECKS)} checks in {elapsed:.1f}s")
    assert not failures, failures
    assert elapsed < 10


@pytest.mark.parametrize("p", PRIMES)
def test_criterion_4_oracle_cross_check(p):
    """Every symbolic zero evaluates to zero at >= 20 curve points."""
    suite = OracleSuite(seed=0, points=20)
    catalog = build_catalog(p)
    cd = build_cover_data(p, catalog)
    total = 0
    for check in SYMBOLIC_CHECKS:
        out = check(catalog)
        ok, msg = suite.check_all(out.claims)
        assert ok, msg
        total += len(out.claims)
    for check in COVER_CHECKS:
        out = check(cd)
        ok, msg = suite.check_all(out.claims)
        assert ok, msg
        total += len(out.claims)
    _line(4, True, f"p={p}: {total} identities re-checked at 20 points")


@pytest.mark.parametrize("p", (3, 5))
def test_criterion_4_mutation_sensitivity(p):
    """Each single sign flip in the catalog breaks at least one check."""
    catalog = build_catalog(p)
    mutations = 0
    for label in CATALOG_LABELS:
        for idx in range(3):
            if catalog[label].components[idx].is_zero():
                continue
            mutated = catalog.with_triple(catalog[label].flip_component(idx))
            broke = any(not chk(mutated).ok for chk in SYMBOLIC_CHECKS)
            assert broke, f"sign flip survived: {label}[{idx}]"
            mutations += 1
    _line(4, True, f"p={p}: {mutations} sign-flip mutations all detected")


def test_criterion_5_hurwitz():
    """2 g_X - 2 = deg * (2 g_Y - 2) exactly for p in 3..13."""
    for p in PRIMES:
        stats = component_stats(p)
        assert hurwitz_consistent(stats), p
        assert stats.genus_base == p * (p - 1) // 2
        assert 2 * stats.genus_component - 2 == stats.degree_per_component * (
            2 * stats.genus_base - 2
        )
    _line(5, True, f"exact for p in {PRIMES}")


def test_criterion_6_matrix_ideal_shift():
    """Constructive ideal-shift identities on 100 samples over GF(7), n in {2, 3}."""
    field = make_extension_field(7)
    out = check_matrix_ideal_shift(field, random.Random(0), samples=100, sizes=(2, 3))
    assert out.ok, out.detail
    _line(6, True, out.detail)


def test_criterion_7_cli_contract(tmp_path, monkeypatch):
    """JSON round-trips, exit codes 0/1/2, byte-identical repeated runs."""
    # round trip
    report = run_verification(3, seed=4)
    assert parse_json(render_json(report)) == report

    # byte-identical across runs with a fixed seed
    cmd = [sys.executable, "-m", "syzcover", "verify", "--prime", "3", "--seed", "4"]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["overall"] == "pass"

    # exit code 2 on invalid input
    bad = subprocess.run(
        [sys.executable, "-m", "syzcover", "verify", "--prime", "15"],
        capture_output=True,
        text=True,
    )
    assert bad.returncode == 2

    # exit code 1 when a check fails
    failed = CoverReport(
        prime=3,
        overall="fail",
        checks=(CheckRecord("catalog_syzygies", "fail", "forced"),),
        stats=ReportStats(2, 48, 24, 3, 49, 1, 4),
        engine=EngineInfo("0.0.0", 0),
    )
    monkeypatch.setattr(cli, "run_verification", lambda *a, **k: failed)
    assert cli.main(["verify", "--prime", "3", "--output", str(tmp_path / "x.json")]) == 1
    _line(7, True, "round-trip, byte-identical output, exit codes 0/1/2")
