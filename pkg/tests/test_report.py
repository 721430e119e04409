import copy

import pytest

from clonefinder import report as R
from clonefinder import search
from clonefinder.config import DetectorConfig, PipelineConfig, SearchParams
from clonefinder.groups import build_groups
from clonefinder.units import build_corpus

SOURCE_A = """\
a = 1; b = 2; c = 3; d = 4; e = 5;
f = 6; g = 7; h = 8; i = 9; j = a + b;
k = a - b; l = a * b;
"""

SOURCE_B = """\
a = 1; b = 2; c = 3; d = 4; e = 5;
f = 6; g = 7; h = 8; i = 9; j = a + b;
m = a / b; n = b / a;
"""


def make_report(sources=None, params=None):
    config = DetectorConfig(
        pipeline=PipelineConfig(),
        search=params or SearchParams(min_clone_length=10, max_edit_distance=0,
                                      head_equality=2),
    )
    files = sources or [("a.c", SOURCE_A), ("b.c", SOURCE_B)]
    seq = build_corpus(files, config.pipeline)
    cands = search.detect_in_sequence(seq, config.search)
    groups = build_groups(cands, seq, config.search)
    loc = sum(src.count("\n") for _, src in files)
    return R.build_report(seq, groups, config, len(files), loc)


def test_report_shape_and_group_content():
    doc = make_report()
    assert doc["format"] == R.FORMAT_NAME
    assert doc["version"] == R.FORMAT_VERSION
    assert doc["corpus"]["files"] == 2
    assert len(doc["groups"]) == 1
    g = doc["groups"][0]
    assert g["kind"] == "exact"
    assert len(g["clones"]) == 2
    assert {c["file"] for c in g["clones"]} == {"a.c", "b.c"}
    for c in g["clones"]:
        assert c["length"] == c["end_pos"] - c["start_pos"] + 1
        assert len(c["units"]) == c["length"]
    assert g["pairs"] == [
        {"a": 0, "b": 1, "distance": 0, "edits_a": [], "edits_b": []}
    ]
    assert g["inconsistent_lines"] == 0


def test_serialization_is_deterministic():
    one = R.dumps(make_report())
    two = R.dumps(make_report())
    assert one == two


def test_group_id_stable_across_runs_and_invariant_to_pair_order():
    doc1 = make_report()
    doc2 = make_report()
    assert [g["id"] for g in doc1["groups"]] == [g["id"] for g in doc2["groups"]]


def test_group_id_changes_with_content():
    doc1 = make_report()
    other = [("a.c", SOURCE_A), ("c.c", SOURCE_B)]
    doc2 = make_report(sources=other)
    assert doc1["groups"][0]["id"] != doc2["groups"][0]["id"]


def test_round_trip(tmp_path):
    doc = make_report()
    path = tmp_path / "r.json"
    R.write_report(doc, path)
    loaded = R.load_report(path)
    assert loaded == doc


def test_load_rejects_foreign_documents(tmp_path):
    path = tmp_path / "r.json"
    path.write_text('{"format": "something-else", "version": 1}')
    with pytest.raises(ValueError):
        R.load_report(path)
    path.write_text('{"format": "%s", "version": 999}' % R.FORMAT_NAME)
    with pytest.raises(ValueError):
        R.load_report(path)


def test_pair_alignment_edit_indices():
    units_a = [{"symbol": s, "first_line": 1, "last_line": 1} for s in [1, 2, 3, 4]]
    units_b = [{"symbol": s, "first_line": 1, "last_line": 1} for s in [1, 9, 3, 4]]
    cost, edits_a, edits_b = R.pair_alignment(units_a, units_b, 1)
    assert cost == 1
    assert edits_a == [1]
    assert edits_b == [1]


def test_inconsistent_lines_counts_distinct_source_lines():
    clone = lambda file, lines: {
        "file": file,
        "units": [{"symbol": 0, "first_line": ln, "last_line": ln} for ln in lines],
    }
    doc = {
        "clones": [clone("x.c", [10, 11, 12]), clone("y.c", [20, 21, 22])],
        "pairs": [{"a": 0, "b": 1, "distance": 2, "edits_a": [0, 1], "edits_b": [1]}],
    }
    # edited units: x.c lines 10+11, y.c line 21 -> three distinct lines
    assert R.group_inconsistent_lines(doc) == 3


def test_inconsistent_report_marks_edited_units():
    params = SearchParams(min_clone_length=10, max_edit_distance=5, head_equality=2)
    src_a = "a=1; b=2; c=3; d=4; e=5; f=6; g=7; h=8; i=9; j=a+b; k=a-b;\n"
    src_b = "a=1; b=2; c=3; d=4; e=5; f=6; g=7; h=8; i=9; j=a*b; k=a-b;\n"
    doc = make_report(sources=[("a.c", src_a), ("b.c", src_b)], params=params)
    kinds = {g["kind"] for g in doc["groups"]}
    assert "inconsistent" in kinds
    g = next(g for g in doc["groups"] if g["kind"] == "inconsistent")
    pair = g["pairs"][0]
    assert pair["distance"] > 0
    assert pair["edits_a"] or pair["edits_b"]
    assert g["inconsistent_lines"] > 0


def test_timing_is_the_only_permitted_variance():
    doc = make_report()
    with_timing = copy.deepcopy(doc)
    with_timing["timing"] = {"search": 0.5}
    stripped = copy.deepcopy(with_timing)
    stripped.pop("timing")
    assert R.dumps(stripped) == R.dumps(doc)
