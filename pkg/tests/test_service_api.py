from __future__ import annotations

import json
import time

import pytest
from fastapi.testclient import TestClient

from docquiz.service.app import create_app
from docquiz.service.config import ServiceConfig

TOKEN = "test-token"
AUTH = {"Authorization": f"Bearer {TOKEN}"}


@pytest.fixture()
def client(tmp_path):
    app = create_app(ServiceConfig(storage_dir=str(tmp_path / "data"), token=TOKEN))
    with TestClient(app) as c:
        yield c


def _wait_job(client, job_id: str) -> dict:
    for _ in range(400):
        job = client.get(f"/jobs/{job_id}", headers=AUTH).json()
        if job["status"] in ("succeeded", "failed"):
            return job
        time.sleep(0.01)
    raise AssertionError("job did not finish")


def _upload(client, fixture_bytes) -> str:
    r = client.post(
        "/documents",
        files={"file": ("procedure.txt", fixture_bytes, "text/plain")},
        headers=AUTH,
    )
    assert r.status_code == 202
    job = _wait_job(client, r.json()["job_id"])
    assert job["status"] == "succeeded"
    return job["result_ref"]


def _session_through_generation(client, fixture_bytes, config=None) -> tuple[str, list[str]]:
    doc_id = _upload(client, fixture_bytes)
    r = client.post("/sessions", json={"doc_id": doc_id, "config": config or {}}, headers=AUTH)
    assert r.status_code == 200
    session = r.json()
    tree = client.get(f"/documents/{doc_id}/sections", headers=AUTH).json()
    ids = [s["section_id"] for s in tree["sections"] if s["number"] in ("1", "2")]
    r = client.post(f"/sessions/{session['session_id']}/sections", json={"section_ids": ids}, headers=AUTH)
    assert r.status_code == 200
    r = client.post(f"/sessions/{session['session_id']}/generate", headers=AUTH)
    assert r.status_code == 202
    job = _wait_job(client, r.json()["job_id"])
    assert job["status"] == "succeeded", job
    r = client.get(
        f"/sessions/{session['session_id']}/candidates",
        params={"status": "verified"},
        headers=AUTH,
    )
    verified_ids = [json.loads(line)["candidate_id"] for line in r.text.splitlines()]
    return session["session_id"], verified_ids


def test_requires_bearer_token(client):
    assert client.get("/jobs/x").status_code == 401
    assert client.get("/jobs/x", headers={"Authorization": "Bearer wrong"}).status_code == 401


def test_upload_and_section_tree_matches_fixture(client, fixture_bytes, fixture_structure):
    doc_id = _upload(client, fixture_bytes)
    tree = client.get(f"/documents/{doc_id}/sections", headers=AUTH).json()
    got = [(s["number"], s["title"]) for s in tree["sections"]]
    want = [(s.number, s.title) for s in fixture_structure.sections]
    assert got == want


def test_unknown_job_404(client):
    assert client.get("/jobs/does-not-exist", headers=AUTH).status_code == 404


def test_reupload_same_bytes_maps_to_same_document(client, fixture_bytes):
    first = _upload(client, fixture_bytes)
    second = _upload(client, fixture_bytes)
    assert first == second


def test_unknown_document_404(client):
    assert client.get("/documents/" + "0" * 64 + "/sections", headers=AUTH).status_code == 404
    r = client.post("/sessions", json={"doc_id": "0" * 64}, headers=AUTH)
    assert r.status_code == 404


def test_validation_errors_are_400(client):
    r = client.post("/sessions", json={"no_doc_id": True}, headers=AUTH)
    assert r.status_code == 400
    r = client.post("/sessions", json={"doc_id": "x", "config": {"bogus_key": 1}}, headers=AUTH)
    assert r.status_code == 400


def test_full_session_flow_with_exports(client, fixture_bytes):
    session_id, verified_ids = _session_through_generation(client, fixture_bytes)
    assert verified_ids

    r = client.post(
        f"/sessions/{session_id}/selections",
        json={"candidate_ids": verified_ids[:5]},
        headers=AUTH,
    )
    assert r.status_code == 200
    assert r.json()["state"] == "curated"

    r = client.get(
        f"/sessions/{session_id}/quiz",
        params={"audience": "trainee", "format": "markdown"},
        headers=AUTH,
    )
    assert r.status_code == 200
    assert r.headers["content-type"].startswith("text/markdown")
    assert "**A.**" not in r.text

    r = client.get(
        f"/sessions/{session_id}/quiz",
        params={"audience": "trainer", "format": "html"},
        headers=AUTH,
    )
    assert r.status_code == 200
    assert r.headers["content-type"].startswith("text/html")

    r = client.get(f"/sessions/{session_id}", headers=AUTH)
    assert r.json()["state"] == "exported"


def test_candidates_status_filter(client, fixture_bytes):
    session_id, verified_ids = _session_through_generation(client, fixture_bytes)
    r = client.get(f"/sessions/{session_id}/candidates", params={"status": "all"}, headers=AUTH)
    all_rows = [json.loads(line) for line in r.text.splitlines()]
    assert len(all_rows) > len(verified_ids)
    statuses = {row["status"] for row in all_rows}
    assert "rejected_duplicate" in statuses
    r = client.get(f"/sessions/{session_id}/candidates", params={"status": "bogus"}, headers=AUTH)
    assert r.status_code == 400


def test_selecting_rejected_candidate_is_422(client, fixture_bytes):
    session_id, _ = _session_through_generation(client, fixture_bytes)
    r = client.get(f"/sessions/{session_id}/candidates", params={"status": "rejected_no_answer"}, headers=AUTH)
    rejected = [json.loads(line)["candidate_id"] for line in r.text.splitlines()]
    assert rejected, "fixture should produce at least one unanswerable candidate"
    r = client.post(
        f"/sessions/{session_id}/selections",
        json={"candidate_ids": rejected[:1]},
        headers=AUTH,
    )
    assert r.status_code == 422
    assert r.json()["type"] == "NotVerified"


def test_generate_on_fresh_session_is_409(client, fixture_bytes):
    doc_id = _upload(client, fixture_bytes)
    session = client.post("/sessions", json={"doc_id": doc_id}, headers=AUTH).json()
    r = client.post(f"/sessions/{session['session_id']}/generate", headers=AUTH)
    assert r.status_code == 409


def test_empty_section_choice_is_422(client, fixture_bytes):
    doc_id = _upload(client, fixture_bytes)
    session = client.post("/sessions", json={"doc_id": doc_id}, headers=AUTH).json()
    r = client.post(f"/sessions/{session['session_id']}/sections", json={"section_ids": []}, headers=AUTH)
    assert r.status_code == 422


def test_annotation_sheet_endpoint(client, fixture_bytes):
    session_id, verified_ids = _session_through_generation(client, fixture_bytes)
    r = client.get(f"/sessions/{session_id}/annotation-sheet", headers=AUTH)
    assert r.status_code == 200
    rows = r.json()
    assert len(rows) == len(verified_ids)


def test_job_progress_is_monotonic(client, fixture_bytes):
    doc_id = _upload(client, fixture_bytes)
    session = client.post("/sessions", json={"doc_id": doc_id}, headers=AUTH).json()
    tree = client.get(f"/documents/{doc_id}/sections", headers=AUTH).json()
    ids = [s["section_id"] for s in tree["sections"]]
    client.post(f"/sessions/{session['session_id']}/sections", json={"section_ids": ids}, headers=AUTH)
    r = client.post(f"/sessions/{session['session_id']}/generate", headers=AUTH)
    job_id = r.json()["job_id"]
    seen = []
    for _ in range(400):
        job = client.get(f"/jobs/{job_id}", headers=AUTH).json()
        seen.append(job["progress"]["done"])
        if job["status"] in ("succeeded", "failed"):
            break
        time.sleep(0.005)
    assert job["status"] == "succeeded"
    assert all(a <= b for a, b in zip(seen, seen[1:]))
    assert job["progress"]["done"] == job["progress"]["total"] > 0
