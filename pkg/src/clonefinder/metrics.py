"""Human assessments of clone groups and the derived study metrics.

The store is an append-only JSON-lines file; the latest record per group
wins, and the full rating history stays on disk for audit.  Ratios follow
the study formulas: IC/C, UIC/IC, F/IC, F/UIC and the fault density
F / (inconsistent logical lines / 1000).
"""
from __future__ import annotations

import json
import threading
import time
from dataclasses import asdict, dataclass
from pathlib import Path

VERDICTS = ("false_positive", "intentional", "unintentional")
FAULT_CATEGORIES = (1, 2, 3)


class AssessmentError(ValueError):
    pass


@dataclass(frozen=True)
class Assessment:
    group_id: str
    verdict: str
    faulty: bool | None = None
    fault_category: int | None = None
    assessor: str = ""
    timestamp: float = 0.0

    def validate(self) -> None:
        if self.verdict not in VERDICTS:
            raise AssessmentError(f"unknown verdict {self.verdict!r}")
        if self.faulty and self.verdict != "unintentional":
            raise AssessmentError("faulty=true requires verdict=unintentional")
        if self.faulty and self.fault_category not in FAULT_CATEGORIES:
            raise AssessmentError("faulty assessments need fault_category 1, 2 or 3")
        if not self.faulty and self.fault_category is not None:
            raise AssessmentError("fault_category only allowed when faulty=true")


class AssessmentStore:
    """Append-only assessment log with a latest-wins current view."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()

    def history(self) -> list[Assessment]:
        if not self.path.exists():
            return []
        out = []
        for line in self.path.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line:
                continue
            raw = json.loads(line)
            out.append(Assessment(**raw))
        return out

    def latest(self) -> dict[str, Assessment]:
        view: dict[str, Assessment] = {}
        for record in self.history():
            view[record.group_id] = record
        return view

    def record(self, assessment: Assessment, known_ids: set[str] | None = None) -> Assessment:
        assessment.validate()
        if known_ids is not None and assessment.group_id not in known_ids:
            raise AssessmentError(f"unknown group id {assessment.group_id!r}")
        if assessment.timestamp == 0.0:
            assessment = Assessment(**{**asdict(assessment), "timestamp": time.time()})
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as handle:
                handle.write(json.dumps(asdict(assessment), sort_keys=True) + "\n")
        return assessment


@dataclass
class StudyReport:
    clone_groups: int
    inconsistent_groups: int
    unintentional_groups: int
    faulty_groups: int
    inconsistent_logical_lines: int
    precision_exact: float | None = None
    precision_inconsistent: float | None = None

    @property
    def ratio_ic(self) -> float | None:
        return self.inconsistent_groups / self.clone_groups if self.clone_groups else None

    @property
    def ratio_uic(self) -> float | None:
        return (
            self.unintentional_groups / self.inconsistent_groups
            if self.inconsistent_groups
            else None
        )

    @property
    def ratio_f(self) -> float | None:
        return self.faulty_groups / self.inconsistent_groups if self.inconsistent_groups else None

    @property
    def ratio_f_uic(self) -> float | None:
        return (
            self.faulty_groups / self.unintentional_groups if self.unintentional_groups else None
        )

    @property
    def fault_density_per_kloc(self) -> float | None:
        if not self.inconsistent_logical_lines:
            return None
        return self.faulty_groups / (self.inconsistent_logical_lines / 1000.0)

    def to_dict(self) -> dict:
        return {
            "clone_groups": self.clone_groups,
            "inconsistent_groups": self.inconsistent_groups,
            "unintentional_groups": self.unintentional_groups,
            "faulty_groups": self.faulty_groups,
            "inconsistent_logical_lines": self.inconsistent_logical_lines,
            "precision_exact": self.precision_exact,
            "precision_inconsistent": self.precision_inconsistent,
            "ratio_ic": self.ratio_ic,
            "ratio_uic": self.ratio_uic,
            "ratio_f": self.ratio_f,
            "ratio_f_uic": self.ratio_f_uic,
            "fault_density_per_kloc": self.fault_density_per_kloc,
        }


@dataclass(frozen=True)
class GroupInfo:
    group_id: str
    kind: str  # "exact" | "inconsistent"
    inconsistent_lines: int = 0


def group_infos_from_report(report_doc: dict) -> list[GroupInfo]:
    return [
        GroupInfo(g["id"], g["kind"], g.get("inconsistent_lines", 0))
        for g in report_doc["groups"]
    ]


def compute_precision(
    infos: list[GroupInfo],
    latest: dict[str, Assessment],
) -> tuple[float | None, float | None]:
    """Per-kind precision = 1 - false positives / rated groups."""
    out = []
    for kind in ("exact", "inconsistent"):
        rated = [i for i in infos if i.kind == kind and i.group_id in latest]
        if not rated:
            out.append(None)
            continue
        fp = sum(1 for i in rated if latest[i.group_id].verdict == "false_positive")
        out.append(1.0 - fp / len(rated))
    return out[0], out[1]


def compute_report(
    infos: list[GroupInfo],
    latest: dict[str, Assessment],
    inconsistent_lines_override: int | None = None,
    exact_sampling: float = 1.0,
) -> StudyReport:
    """Counts and ratios over the assessed groups.

    Unassessed groups count as true, intentional and non-faulty.  When only
    a random sample of the exact groups was rated, *exact_sampling* is the
    sampled fraction and the exact true-positive count is extrapolated from
    the rated sample.
    """
    def is_fp(info: GroupInfo) -> bool:
        a = latest.get(info.group_id)
        return a is not None and a.verdict == "false_positive"

    exact = [i for i in infos if i.kind == "exact"]
    inconsistent = [i for i in infos if i.kind == "inconsistent"]

    ic_true = [i for i in inconsistent if not is_fp(i)]
    if exact_sampling < 1.0:
        rated = [i for i in exact if i.group_id in latest]
        rated_true = sum(1 for i in rated if not is_fp(i))
        exact_true = round(rated_true / exact_sampling) if exact_sampling > 0 else 0
    else:
        exact_true = sum(1 for i in exact if not is_fp(i))

    uic = [
        i
        for i in ic_true
        if (a := latest.get(i.group_id)) is not None and a.verdict == "unintentional"
    ]
    faulty = [i for i in uic if latest[i.group_id].faulty]

    if inconsistent_lines_override is not None:
        lines = inconsistent_lines_override
    else:
        lines = sum(i.inconsistent_lines for i in ic_true)

    precision_exact, precision_inconsistent = compute_precision(infos, latest)
    return StudyReport(
        clone_groups=exact_true + len(ic_true),
        inconsistent_groups=len(ic_true),
        unintentional_groups=len(uic),
        faulty_groups=len(faulty),
        inconsistent_logical_lines=lines,
        precision_exact=precision_exact,
        precision_inconsistent=precision_inconsistent,
    )


def fault_category_totals(latest: dict[str, Assessment]) -> dict[int, int]:
    totals = {1: 0, 2: 0, 3: 0}
    for a in latest.values():
        if a.faulty and a.fault_category in totals:
            totals[a.fault_category] += 1
    return totals


def summarize_projects(reports: list[StudyReport]) -> dict:
    """Aggregate per-project reports: sums over counts, means over ratios.

    Ratio and precision means are taken over the values at their reported
    display precision (two decimals; fault density one decimal), matching
    how per-project summary tables are conventionally aggregated.
    """
    if not reports:
        raise ValueError("need at least one report")

    def mean2(values):
        present = [round(v, 2) for v in values if v is not None]
        return round(sum(present) / len(present), 4) if present else None

    def mean1(values):
        present = [round(v, 1) for v in values if v is not None]
        return round(sum(present) / len(present), 4) if present else None

    return {
        "clone_groups": sum(r.clone_groups for r in reports),
        "inconsistent_groups": sum(r.inconsistent_groups for r in reports),
        "unintentional_groups": sum(r.unintentional_groups for r in reports),
        "faulty_groups": sum(r.faulty_groups for r in reports),
        "inconsistent_logical_lines": sum(r.inconsistent_logical_lines for r in reports),
        "mean_precision_exact": mean2([r.precision_exact for r in reports]),
        "mean_precision_inconsistent": mean2([r.precision_inconsistent for r in reports]),
        "mean_ratio_ic": mean2([r.ratio_ic for r in reports]),
        "mean_ratio_uic": mean2([r.ratio_uic for r in reports]),
        "mean_ratio_f": mean2([r.ratio_f for r in reports]),
        "mean_ratio_f_uic": mean2([r.ratio_f_uic for r in reports]),
        "mean_fault_density_per_kloc": mean1(
            [r.fault_density_per_kloc for r in reports]
        ),
    }
