"""Structured detection report: a versioned, deterministic JSON document.

Group ids are content hashes of the sorted clone coordinates, so they are
stable across runs on identical input.  The report embeds each clone's
normalized unit symbols and per-unit line spans, which lets the review
service compute pair alignments without re-reading the corpus.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from . import align
from .config import DetectorConfig
from .groups import Clone, CloneGroup
from .units import UnitSequence

FORMAT_NAME = "clonefinder-report"
FORMAT_VERSION = 1
TOOL_VERSION = "0.1.0"


def group_id(group: CloneGroup) -> str:
    coords = sorted((c.file, c.start, c.end, c.first_line, c.last_line) for c in group.clones)
    digest = hashlib.sha1(repr(coords).encode("utf-8")).hexdigest()
    return digest[:16]


def _clone_units(seq: UnitSequence, clone: Clone) -> list[dict]:
    out = []
    for pos in range(clone.start, clone.end + 1):
        unit = seq.unit_at(pos)
        out.append(
            {"symbol": unit.symbol, "first_line": unit.first_line, "last_line": unit.last_line}
        )
    return out


def pair_alignment(units_a: list[dict], units_b: list[dict], bound: int):
    """Unit-level alignment between two clones of one pair.

    Returns ``(distance, edits_a, edits_b)`` where the edit lists hold the
    unit indices (within each clone) touched by an edit operation, or None
    if the distance exceeds *bound*.
    """
    syms_a = [u["symbol"] for u in units_a]
    syms_b = [u["symbol"] for u in units_b]
    result = align.alignment(syms_a, syms_b, bound)
    if result is None:
        return None
    cost, ops = result
    edits_a: list[int] = []
    edits_b: list[int] = []
    ia = ib = 0
    for op in ops:
        if op == align.OP_MATCH:
            ia += 1
            ib += 1
        elif op == align.OP_SUBST:
            edits_a.append(ia)
            edits_b.append(ib)
            ia += 1
            ib += 1
        elif op == align.OP_INSERT:
            edits_a.append(ia)
            ia += 1
        else:
            edits_b.append(ib)
            ib += 1
    return cost, edits_a, edits_b


def group_inconsistent_lines(group_dict: dict) -> int:
    """Source lines spanned by units that take part in any pair's edits."""
    lines: set[tuple[str, int]] = set()
    clones = group_dict["clones"]
    for pair in group_dict["pairs"]:
        for side, edits in (("a", pair["edits_a"]), ("b", pair["edits_b"])):
            clone = clones[pair[side]]
            for idx in edits:
                if idx >= len(clone["units"]):
                    continue
                unit = clone["units"][idx]
                for line in range(unit["first_line"], unit["last_line"] + 1):
                    lines.add((clone["file"], line))
    return len(lines)


def build_report(
    seq: UnitSequence,
    groups: list[CloneGroup],
    config: DetectorConfig,
    file_count: int,
    loc: int,
    timing: dict[str, float] | None = None,
) -> dict:
    group_docs = []
    for g in groups:
        clones = sorted(g.clones, key=Clone.key)
        index = {c.key(): i for i, c in enumerate(clones)}
        clone_docs = [
            {
                "file": c.file,
                "start_pos": c.start,
                "end_pos": c.end,
                "first_line": c.first_line,
                "last_line": c.last_line,
                "length": c.length,
                "units": _clone_units(seq, c),
            }
            for c in clones
        ]
        pair_docs = []
        for p in sorted(g.pairs, key=lambda p: (p.a.key(), p.b.key())):
            ia, ib = index[p.a.key()], index[p.b.key()]
            aligned = pair_alignment(
                clone_docs[ia]["units"], clone_docs[ib]["units"], max(p.distance, 1)
            )
            if aligned is None:
                edits_a, edits_b = [], []
            else:
                _, edits_a, edits_b = aligned
            pair_docs.append(
                {"a": ia, "b": ib, "distance": p.distance, "edits_a": edits_a, "edits_b": edits_b}
            )
        doc = {
            "id": group_id(g),
            "kind": g.kind,
            "clones": clone_docs,
            "pairs": pair_docs,
        }
        doc["inconsistent_lines"] = group_inconsistent_lines(doc)
        group_docs.append(doc)

    report = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "tool_version": TOOL_VERSION,
        "config": {
            "language": config.pipeline.language,
            "boundary_mode": config.pipeline.boundary_mode,
            "normalize_identifiers": config.pipeline.normalize_identifiers,
            "normalize_literals": config.pipeline.normalize_literals,
            "exclusion_patterns": list(config.pipeline.exclusion_patterns),
            "min_clone_length": config.search.min_clone_length,
            "max_edit_distance": config.search.max_edit_distance,
            "max_inconsistency_ratio": config.search.max_inconsistency_ratio,
            "head_equality": config.search.head_equality,
            "max_word_chunk": config.search.max_word_chunk,
        },
        "corpus": {
            "files": file_count,
            "units": sum(1 for s in seq.symbols if s >= 0),
            "kloc": round(loc / 1000.0, 3),
            "errors": list(seq.errors),
            "warnings": list(seq.warnings),
        },
        "groups": group_docs,
    }
    if timing is not None:
        report["timing"] = timing
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def write_report(report: dict, path: str | Path) -> None:
    Path(path).write_text(dumps(report), encoding="utf-8")


def load_report(path: str | Path) -> dict:
    with open(path, encoding="utf-8") as handle:
        doc = json.load(handle)
    if doc.get("format") != FORMAT_NAME:
        raise ValueError(f"{path}: not a {FORMAT_NAME} document")
    if doc.get("version") != FORMAT_VERSION:
        raise ValueError(f"{path}: unsupported report version {doc.get('version')}")
    return doc
