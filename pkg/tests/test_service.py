import threading

import pytest
from fastapi.testclient import TestClient

from clonefinder import search
from clonefinder.config import DetectorConfig, PipelineConfig, SearchParams
from clonefinder.groups import build_groups
from clonefinder.report import build_report, write_report
from clonefinder.service import create_app
from clonefinder.units import build_corpus

SRC_ONE = """\
a = 1; b = 2; c = 3; d = 4; e = 5;
f = 6; g = 7; h = 8; i = 9; j = a + b;
k = a - b; l = a * b;
"""

SRC_TWO = """\
a = 1; b = 2; c = 3; d = 4; e = 5;
f = 6; g = 7; h = 8; i = 9; j = a * b;
m = a / b; n = b / a;
"""


@pytest.fixture
def client(tmp_path):
    (tmp_path / "one.c").write_text(SRC_ONE)
    (tmp_path / "two.c").write_text(SRC_TWO)
    config = DetectorConfig(
        pipeline=PipelineConfig(),
        search=SearchParams(min_clone_length=10, max_edit_distance=5, head_equality=2),
    )
    files = [("one.c", SRC_ONE), ("two.c", SRC_TWO)]
    seq = build_corpus(files, config.pipeline)
    cands = search.detect_in_sequence(seq, config.search)
    groups = build_groups(cands, seq, config.search)
    assert groups, "fixture corpus must contain a clone"
    doc = build_report(seq, groups, config, file_count=2, loc=6)
    report_path = tmp_path / "report.json"
    write_report(doc, report_path)
    app = create_app(str(report_path), str(tmp_path / "store.jsonl"),
                     source_root=str(tmp_path))
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert body["groups"] >= 1


def test_list_groups_and_kind_filter(client):
    groups = client.get("/groups").json()
    assert groups
    for g in groups:
        assert set(g) >= {"id", "kind", "clone_count", "files", "assessed", "verdict"}
        assert g["assessed"] is False
    for kind in ("exact", "inconsistent"):
        for g in client.get("/groups", params={"kind": kind}).json():
            assert g["kind"] == kind


def test_group_detail_includes_excerpts_and_pairs(client):
    gid = client.get("/groups").json()[0]["id"]
    detail = client.get(f"/groups/{gid}").json()
    assert detail["id"] == gid
    assert len(detail["clones"]) >= 2
    for clone in detail["clones"]:
        excerpt = clone["excerpt"]
        assert excerpt is not None
        assert excerpt["first_line"] >= 1
        assert excerpt["lines"]
    assert detail["pairs"]
    assert detail["assessment"] is None


def test_unknown_group_404(client):
    assert client.get("/groups/deadbeef00000000").status_code == 404
    response = client.post("/groups/deadbeef00000000/assessment",
                           json={"verdict": "intentional"})
    assert response.status_code == 404


def test_post_assessment_read_your_writes(client):
    gid = client.get("/groups").json()[0]["id"]
    response = client.post(f"/groups/{gid}/assessment",
                           json={"verdict": "intentional", "assessor": "alice"})
    assert response.status_code == 200
    assert response.json()["status"] == "recorded"
    detail = client.get(f"/groups/{gid}").json()
    assert detail["assessment"]["verdict"] == "intentional"
    assert detail["assessment"]["assessor"] == "alice"
    listed = {g["id"]: g for g in client.get("/groups").json()}
    assert listed[gid]["assessed"] is True
    assert listed[gid]["verdict"] == "intentional"
    unassessed = client.get("/groups", params={"assessed": "false"}).json()
    assert gid not in {g["id"] for g in unassessed}


def test_invalid_assessment_422(client):
    gid = client.get("/groups").json()[0]["id"]
    bad_payloads = [
        {"verdict": "bogus"},
        {"verdict": "intentional", "faulty": True, "fault_category": 1},
        {"verdict": "unintentional", "faulty": True},  # category missing
    ]
    for payload in bad_payloads:
        assert client.post(f"/groups/{gid}/assessment", json=payload).status_code == 422
    # nothing was stored
    assert client.get(f"/groups/{gid}").json()["assessment"] is None


def test_metrics_endpoint_reflects_assessments(client):
    before = client.get("/metrics").json()
    assert before["unintentional_groups"] == 0
    gid = client.get("/groups").json()[0]["id"]
    client.post(f"/groups/{gid}/assessment",
                json={"verdict": "unintentional", "faulty": True, "fault_category": 2})
    after = client.get("/metrics").json()
    assert after["unintentional_groups"] == 1
    assert after["faulty_groups"] == 1
    assert after["clone_groups"] == before["clone_groups"]


def test_concurrent_writers_all_recorded(client):
    gid = client.get("/groups").json()[0]["id"]
    errors = []

    def rate(i):
        try:
            r = client.post(f"/groups/{gid}/assessment",
                            json={"verdict": "intentional", "assessor": f"w{i}"})
            assert r.status_code == 200
        except Exception as exc:  # pragma: no cover - surfaced via errors list
            errors.append(exc)

    threads = [threading.Thread(target=rate, args=(i,)) for i in range(12)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    detail = client.get(f"/groups/{gid}").json()
    assert detail["assessment"]["verdict"] == "intentional"


def test_latest_wins_after_reassessment(client):
    gid = client.get("/groups").json()[0]["id"]
    client.post(f"/groups/{gid}/assessment", json={"verdict": "intentional"})
    client.post(f"/groups/{gid}/assessment",
                json={"verdict": "unintentional", "faulty": True, "fault_category": 1})
    detail = client.get(f"/groups/{gid}").json()
    assert detail["assessment"]["verdict"] == "unintentional"
    assert detail["assessment"]["fault_category"] == 1
