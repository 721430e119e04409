"""Start a review service over a deterministic fixture corpus.

Usage: python3 serve_fixture.py PORT WORKDIR

Generates 12 clone groups (6 exact, 6 inconsistent) from structurally
distinct statement blocks, writes the sources, report and a pre-seeded
assessment store into WORKDIR, then serves them on 127.0.0.1:PORT.
"""
from __future__ import annotations

import sys
from pathlib import Path

import uvicorn

from clonefinder import search
from clonefinder.config import DetectorConfig, PipelineConfig, SearchParams
from clonefinder.groups import build_groups
from clonefinder.metrics import Assessment, AssessmentStore
from clonefinder.report import build_report, write_report
from clonefinder.service import create_app
from clonefinder.units import build_corpus

BLOCK_LENGTH = 12
N_GROUPS = 12


def statement(pattern: int) -> str:
    """One statement whose normalized symbol is unique per pattern value."""
    ops = ["+" if pattern & (1 << bit) else "-" for bit in range(8)]
    terms = "".join(f" {op} v{idx}" for idx, op in enumerate(ops))
    return f"r = v{pattern}{terms};"


def block(group_index: int, mutated: bool) -> str:
    lines = []
    for unit in range(BLOCK_LENGTH):
        pattern = group_index * BLOCK_LENGTH + unit
        if mutated and unit == BLOCK_LENGTH // 2:
            pattern = 0xF0 + group_index  # outside the per-unit pattern range
        lines.append(statement(pattern))
    return "\n".join(lines) + "\n"


def main() -> None:
    port = int(sys.argv[1])
    workdir = Path(sys.argv[2])
    workdir.mkdir(parents=True, exist_ok=True)

    files = []
    for g in range(N_GROUPS):
        inconsistent = g % 2 == 1
        for side, mutated in (("a", False), ("b", inconsistent)):
            name = f"group{g:02d}_{side}.c"
            (workdir / name).write_text(block(g, mutated))
            files.append(name)

    config = DetectorConfig(
        pipeline=PipelineConfig(),
        search=SearchParams(min_clone_length=10, max_edit_distance=5, head_equality=2),
    )
    contents = [(name, (workdir / name).read_text()) for name in files]
    seq = build_corpus(contents, config.pipeline)
    candidates = search.detect_in_sequence(seq, config.search)
    groups = build_groups(candidates, seq, config.search)
    loc = sum(text.count("\n") for _, text in contents)
    doc = build_report(seq, groups, config, file_count=len(files), loc=loc)

    report_path = workdir / "report.json"
    write_report(doc, report_path)

    # pre-seed assessments: two faulty inconsistent groups and one rated exact
    store = AssessmentStore(workdir / "assessments.jsonl")
    inconsistent_ids = [g["id"] for g in doc["groups"] if g["kind"] == "inconsistent"]
    exact_ids = [g["id"] for g in doc["groups"] if g["kind"] == "exact"]
    for gid in inconsistent_ids[:2]:
        store.record(Assessment(gid, "unintentional", True, 2, assessor="fixture"))
    if exact_ids:
        store.record(Assessment(exact_ids[0], "intentional", assessor="fixture"))

    app = create_app(str(report_path), str(workdir / "assessments.jsonl"),
                     source_root=str(workdir))
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")


if __name__ == "__main__":
    main()
