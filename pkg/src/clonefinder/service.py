"""Embedded HTTP service backing the review console.

Serves clone groups with source excerpts and per-pair alignments, records
assessments (single writer, append-only store) and reports study metrics.
"""
from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel

from . import metrics, report

EXCERPT_CONTEXT = 3


class AssessmentPayload(BaseModel):
    verdict: str
    faulty: bool | None = None
    fault_category: int | None = None
    assessor: str = ""


class _SourceCache:
    def __init__(self, root: Path):
        self.root = root
        self._files: dict[str, list[str] | None] = {}

    def lines(self, file_id: str) -> list[str] | None:
        if file_id not in self._files:
            path = Path(file_id)
            if not path.is_absolute():
                path = self.root / path
            try:
                self._files[file_id] = path.read_text(encoding="utf-8").splitlines()
            except OSError:
                self._files[file_id] = None
        return self._files[file_id]

    def excerpt(self, file_id: str, first_line: int, last_line: int) -> dict | None:
        lines = self.lines(file_id)
        if lines is None:
            return None
        lo = max(1, first_line - EXCERPT_CONTEXT)
        hi = min(len(lines), last_line + EXCERPT_CONTEXT)
        return {"first_line": lo, "lines": lines[lo - 1:hi]}


def create_app(report_path: str, store_path: str, source_root: str = ".") -> FastAPI:
    doc = report.load_report(report_path)
    groups_by_id = {g["id"]: g for g in doc["groups"]}
    infos = metrics.group_infos_from_report(doc)
    store = metrics.AssessmentStore(store_path)
    sources = _SourceCache(Path(source_root))
    write_lock = threading.Lock()

    app = FastAPI(title="clonefinder review service")

    @app.get("/health")
    def health():
        return {"status": "ok", "groups": len(groups_by_id)}

    @app.get("/groups")
    def list_groups(
        kind: str | None = Query(default=None),
        assessed: bool | None = Query(default=None),
    ):
        latest = store.latest()
        out = []
        for g in doc["groups"]:
            if kind is not None and g["kind"] != kind:
                continue
            has_assessment = g["id"] in latest
            if assessed is not None and has_assessment != assessed:
                continue
            record = latest.get(g["id"])
            out.append(
                {
                    "id": g["id"],
                    "kind": g["kind"],
                    "clone_count": len(g["clones"]),
                    "files": sorted({c["file"] for c in g["clones"]}),
                    "length": max(c["length"] for c in g["clones"]),
                    "assessed": has_assessment,
                    "verdict": record.verdict if record else None,
                }
            )
        return out

    @app.get("/groups/{gid}")
    def get_group(gid: str):
        g = groups_by_id.get(gid)
        if g is None:
            raise HTTPException(status_code=404, detail=f"unknown group {gid}")
        latest = store.latest()
        clones = []
        for c in g["clones"]:
            clones.append(
                {
                    **{k: c[k] for k in ("file", "first_line", "last_line", "length")},
                    "units": c["units"],
                    "excerpt": sources.excerpt(c["file"], c["first_line"], c["last_line"]),
                }
            )
        record = latest.get(gid)
        return {
            "id": gid,
            "kind": g["kind"],
            "inconsistent_lines": g.get("inconsistent_lines", 0),
            "clones": clones,
            "pairs": g["pairs"],
            "assessment": record.__dict__ if record else None,
        }

    @app.post("/groups/{gid}/assessment")
    def post_assessment(gid: str, payload: AssessmentPayload):
        if gid not in groups_by_id:
            raise HTTPException(status_code=404, detail=f"unknown group {gid}")
        assessment = metrics.Assessment(
            group_id=gid,
            verdict=payload.verdict,
            faulty=payload.faulty,
            fault_category=payload.fault_category,
            assessor=payload.assessor,
        )
        try:
            with write_lock:
                stored = store.record(assessment, known_ids=set(groups_by_id))
        except metrics.AssessmentError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return {"status": "recorded", "assessment": stored.__dict__}

    @app.get("/metrics")
    def get_metrics():
        study = metrics.compute_report(infos, store.latest())
        return study.to_dict()

    return app


def serve(report_path: str, store_path: str, bind: str = "127.0.0.1:8734", source_root: str = "."):
    import uvicorn

    host, _, port = bind.partition(":")
    app = create_app(report_path, store_path, source_root)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8734), log_level="warning")
