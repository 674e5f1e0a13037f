"""Verification pipeline and machine-readable reports.

run_verification executes the symbolic identity checks, the numeric
oracle cross-checks and (when the census field fits under the cap) the
fiber enumeration for one prime, and collects everything into a report
that serializes byte-identically for a fixed (prime, seed, version).
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass

from . import __version__
from .census import (
    component_stats,
    determinant_classes,
    enumerate_fiber,
    hurwitz_consistent,
    verify_fiber_point,
)
from .cover import (
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
from .gf import DEFAULT_SCAN_CAP, is_prime, make_extension_field
from .oracle import CheckOutcome, OracleSuite
from .syz import (
    build_catalog,
    check_alpha,
    check_catalog,
    check_independence,
    check_kernel_relation,
)

SELECTIONS = ("lemmas", "cover", "fiber")


@dataclass(frozen=True)
class CheckRecord:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str


@dataclass(frozen=True)
class ReportStats:
    components: int
    total_fiber: int
    degree: int
    genus_base: int
    genus_component: int
    eta_field_degree: int
    fiber_field_degree: int


@dataclass(frozen=True)
class EngineInfo:
    version: str
    seed: int


@dataclass(frozen=True)
class CoverReport:
    prime: int
    overall: str
    checks: tuple
    stats: ReportStats
    engine: EngineInfo

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "overall": self.overall,
            "checks": [asdict(c) for c in self.checks],
            "stats": asdict(self.stats),
            "engine": asdict(self.engine),
        }

    @classmethod
    def from_dict(cls, data: dict) -> CoverReport:
        return cls(
            prime=data["prime"],
            overall=data["overall"],
            checks=tuple(CheckRecord(**c) for c in data["checks"]),
            stats=ReportStats(**data["stats"]),
            engine=EngineInfo(**data["engine"]),
        )


def parse_selection(text: str) -> tuple[str, ...]:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if "all" in tokens:
        return SELECTIONS
    for t in tokens:
        if t not in SELECTIONS:
            raise ValueError(f"unknown check group {t!r}; expected lemmas, cover, fiber or all")
    return tuple(t for t in SELECTIONS if t in tokens)


def _fiber_checks(p: int, cap: int):
    census = enumerate_fiber(p, cap)
    records = []
    if census.skipped:
        records.append(CheckRecord("fiber_census", "skipped", census.reason))
        records.append(
            CheckRecord("component_structure", "skipped", "no census to tabulate")
        )
    else:
        formula = (p * p - 1) * p * (p - 1)
        ok = census.total == formula and all(
            verify_fiber_point(p, pt) for pt in census.points
        )
        detail = (
            f"{census.total} fiber points enumerated in GF({p}^{census.field_degree}), "
            f"equal to (p^2-1)p(p-1), every point re-verified"
            if ok
            else f"census total {census.total} or point re-verification failed"
        )
        records.append(CheckRecord("fiber_census", "pass" if ok else "fail", detail))

        classes = determinant_classes(census)
        field = census.points[0].c.field
        degree = p * (p * p - 1)
        struct_ok = (
            len(classes) == p - 1
            and all(len(v) == degree for v in classes.values())
            and all(
                field.element(k) ** (p - 1) == field(-2) for k in classes
            )
        )
        detail = (
            f"ad-bc takes exactly {p - 1} values, each with (p-1)-th power -2, "
            f"each on {degree} points"
            if struct_ok
            else "determinant class structure broken"
        )
        records.append(
            CheckRecord("component_structure", "pass" if struct_ok else "fail", detail)
        )

    stats = component_stats(p, None if census.skipped else census)
    hur_ok = (
        hurwitz_consistent(stats)
        and stats.total_fiber % stats.component_count == 0
        and stats.total_fiber // stats.component_count == stats.degree_per_component
    )
    records.append(
        CheckRecord(
            "genus_hurwitz",
            "pass" if hur_ok else "fail",
            f"2g-2 = {stats.degree_per_component}*(2*{stats.genus_base}-2) gives genus "
            f"{stats.genus_component}"
            if hur_ok
            else "Hurwitz bookkeeping failed",
        )
    )
    return records, stats


def run_verification(
    p: int,
    checks: str | tuple = "all",
    seed: int = 0,
    max_field_size: int = DEFAULT_SCAN_CAP,
    oracle_points: int = 20,
) -> CoverReport:
    """Execute the selected check groups for one prime."""
    if not isinstance(p, int) or not is_prime(p) or p < 3:
        raise ValueError(f"prime must be an odd prime >= 3, got {p}")
    selection = parse_selection(checks) if isinstance(checks, str) else tuple(checks)

    records: list[CheckRecord] = []
    oracles = OracleSuite(seed=seed, points=oracle_points)

    def run(name: str, outcome: CheckOutcome):
        ok, detail = outcome.ok, outcome.detail
        if ok and outcome.claims:
            oracle_ok, oracle_msg = oracles.check_all(outcome.claims)
            if not oracle_ok:
                ok, detail = False, f"{detail}; {oracle_msg}"
            else:
                detail = f"{detail}; {oracle_msg}"
        records.append(CheckRecord(name, "pass" if ok else "fail", detail))

    catalog = build_catalog(p)
    if "lemmas" in selection:
        run("catalog_syzygies", check_catalog(catalog))
        run("kernel_relation", check_kernel_relation(catalog))
        run("alpha_isomorphism", check_alpha(catalog))
        run("generator_independence", check_independence(catalog))

    if "cover" in selection:
        cd = build_cover_data(p, catalog)
        run("transition_matrix", check_transition(cd))
        run("base_change_matrices", check_base_change(cd))
        run("cocycle_compatibility", check_cocycle(cd))
        run("chart_relations", check_relations(cd))
        run("gluing_substitution", check_gluing(cd))
        run("section_ring_membership", check_section_ring(cd))
        run("determinant_periodicity", check_det_periodicity(cd))
        run("w0_specialization", check_w0_specialization(cd))
        shift_field = make_extension_field(7)
        run(
            "matrix_ideal_shift",
            check_matrix_ideal_shift(shift_field, random.Random(seed), samples=100),
        )

    if "fiber" in selection:
        fiber_records, stats = _fiber_checks(p, max_field_size)
        records.extend(fiber_records)
    else:
        stats = component_stats(p)

    overall = "pass" if all(r.status != "fail" for r in records) else "fail"
    return CoverReport(
        prime=p,
        overall=overall,
        checks=tuple(records),
        stats=ReportStats(
            components=stats.component_count,
            total_fiber=stats.total_fiber,
            degree=stats.degree_per_component,
            genus_base=stats.genus_base,
            genus_component=stats.genus_component,
            eta_field_degree=stats.eta_field_degree,
            fiber_field_degree=stats.fiber_field_degree,
        ),
        engine=EngineInfo(version=__version__, seed=seed),
    )


def render_json(report: CoverReport | list) -> str:
    if isinstance(report, list):
        payload = [r.to_dict() for r in report]
    else:
        payload = report.to_dict()
    return json.dumps(payload, indent=2) + "\n"


def render_text(report: CoverReport | list) -> str:
    if isinstance(report, list):
        return "\n".join(render_text(r) for r in report)
    lines = [
        f"prime {report.prime}  overall {report.overall}  "
        f"(engine {report.engine.version}, seed {report.engine.seed})",
        f"{'check':<28} {'status':<8} detail",
    ]
    for c in report.checks:
        lines.append(f"{c.name:<28} {c.status:<8} {c.detail}")
    s = report.stats
    lines.append(
        f"stats: components={s.components} total_fiber={s.total_fiber} "
        f"degree={s.degree} genus_base={s.genus_base} "
        f"genus_component={s.genus_component} eta_field_degree={s.eta_field_degree} "
        f"fiber_field_degree={s.fiber_field_degree}"
    )
    return "\n".join(lines) + "\n"


def parse_json(text: str):
    data = json.loads(text)
    if isinstance(data, list):
        return [CoverReport.from_dict(d) for d in data]
    return CoverReport.from_dict(data)


def emit_report(report, fmt: str = "json", destination=None) -> str:
    """Render and optionally write the report; returns the rendered text."""
    if fmt == "json":
        text = render_json(report)
    elif fmt == "text":
        text = render_text(report)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if destination is not None:
        with open(destination, "w", encoding="utf-8") as handle:
            handle.write(text)
    return text
