"""Acceptance criteria, one test per criterion, at the stated tolerances.

Each test enforces its own runtime bound; the conftest hook prints one
``[acceptance] <test>: PASS/FAIL`` line per criterion. Criterion 9 needs
operator-supplied model checkpoints and is skipped unless configured.
"""

from __future__ import annotations

import json
import os
import random
import re
import time
from pathlib import Path

import numpy as np
import pytest

from docquiz.backends import MockEmbeddingBackend, embed
from docquiz.evaluation import AnnotationRecord, compute_metrics
from docquiz.ingest import (
    enumerate_passages,
    match_heading,
    segment,
    strip_boilerplate,
    strip_parentheticals,
    validate_structure,
)
from docquiz.qgen import (
    CandidateQuestion,
    GeneratorConfig,
    dedup,
    generate_candidates,
    token_f1,
)
from docquiz.textutil import normalize_ws

from conftest import FIXTURES, build_random_document, table2_records
from test_roundtrip import oracle_token_f1


class Timer:
    def __init__(self, budget_seconds: float):
        self.budget = budget_seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, *exc):
        if exc[0] is None:
            elapsed = time.monotonic() - self.start
            assert elapsed < self.budget, f"runtime {elapsed:.2f}s exceeds {self.budget}s"


def test_c1_metrics_reproduction():
    """50 judgments; 33 valid, 30 correct, 27 correct-among-valid."""
    with Timer(1.0):
        records = [
            AnnotationRecord(r["candidate_id"], r["question_valid"], r["answer_correct"])
            for r in table2_records()
        ]
        report = compute_metrics(records)
        assert report.question_accuracy == pytest.approx(0.660, abs=0.001)
        assert report.answer_accuracy == pytest.approx(0.600, abs=0.001)
        assert report.answer_accuracy_given_valid == pytest.approx(0.818, abs=0.001)


def _random_candidate_list(rng: random.Random) -> list[CandidateQuestion]:
    vocab = (
        "who what when how approves reviews signs issues records plan board "
        "anomaly waiver budget schedule team product item report baseline "
        "audit closure meeting supplier manager register archive orbit"
    ).split()
    out = []
    n = rng.randint(2, 20)
    for i in range(1, n + 1):
        words = [rng.choice(vocab) for _ in range(rng.randint(3, 9))]
        if rng.random() < 0.25 and out:  # plant near-duplicates
            words = out[rng.randrange(len(out))].question_text.rstrip("?").split()
            if rng.random() < 0.5:
                words = words + [rng.choice(vocab)]
        out.append(
            CandidateQuestion(
                candidate_id=f"c{i:04d}",
                passage_id="s000.p000.c00",
                question_text=" ".join(words) + "?",
                strategy="answer_agnostic",
                backend_id="mock-gen",
                beam_score=0.0,
                beam_rank=0,
            )
        )
    return out


def test_c2_dedup_correctness():
    """500 random lists: survivors pairwise < 0.8, rejects >= 0.8 to a kept one."""
    with Timer(30.0):
        emb = MockEmbeddingBackend()
        threshold = 0.8
        eps = 1e-9  # float-path noise allowance for pairs exactly at 0.8
        rng = random.Random(20_240_817)
        total_rejected = 0
        for _ in range(500):
            cands = _random_candidate_list(rng)
            kept = dedup(cands, emb, threshold)
            vectors = {
                c.candidate_id: np.array(embed(emb, c.question_text).values)
                for c in cands
            }
            kept_ids = [c.candidate_id for c in kept]
            for i in range(len(kept_ids)):
                for j in range(i + 1, len(kept_ids)):
                    cos = float(vectors[kept_ids[i]] @ vectors[kept_ids[j]])
                    assert cos < threshold + eps
            for cand in cands:
                if cand.status == "rejected_duplicate":
                    total_rejected += 1
                    assert cand.duplicate_of in kept_ids
                    cos = float(vectors[cand.candidate_id] @ vectors[cand.duplicate_of])
                    assert cos >= threshold - eps
        assert total_rejected > 100  # the corpus genuinely exercises rejection


def test_c3_verification_span_containment(fixture_document, mock_backends):
    """Fixture run: all verified spans exact; all mock-unanswerable rejected."""
    from docquiz.backends.contracts import answer
    from docquiz.verify import AnswerabilityPolicy, decide_answerable, verify_all

    with Timer(10.0):
        structure = segment(fixture_document)
        passages, _ = enumerate_passages(structure, fixture_document, 480)
        run = generate_candidates(passages, mock_backends, GeneratorConfig())
        by_id = {p.passage_id: p for p in run.passages}
        verified, report = verify_all(
            run.pool, by_id, mock_backends.qa, AnswerabilityPolicy()
        )
        assert verified
        candidates_by_id = run.by_id()
        for v in verified:
            passage = by_id[candidates_by_id[v.candidate_id].passage_id]
            assert passage.text[v.answer_start_char:v.answer_end_char] == v.answer_text

        # Per-candidate oracle: the mock rule decides, statuses must agree.
        rejected_seen = 0
        for cand in run.pool:
            result = answer(mock_backends.qa, cand.question_text, by_id[cand.passage_id].text)
            if decide_answerable(result, AnswerabilityPolicy()):
                assert cand.status == "verified"
            else:
                assert cand.status == "rejected_no_answer"
                rejected_seen += 1
        assert rejected_seen >= 1
        assert report.verified + report.rejected_no_answer == report.total


def _cli_run(storage: Path, out_md: Path) -> bytes:
    """ingest -> generate -> select-all -> export; returns candidates JSONL."""
    from docquiz.cli import main
    from docquiz.service.store import FileStore

    rc = main(["--storage-dir", str(storage), "ingest", str(FIXTURES / "procedure.txt")])
    assert rc == 0
    store = FileStore(storage)
    doc_id = store.list_keys("document")[0]
    rc = main(["--storage-dir", str(storage), "generate", doc_id, "--sections", "1,2"])
    assert rc == 0
    session_id = store.list_keys("session")[0]
    session = json.loads(store.get("session", session_id).payload)
    rc = main(
        ["--storage-dir", str(storage), "select", session_id,
         "--ids", ",".join(session["candidate_pool"])]
    )
    assert rc == 0
    rc = main(
        ["--storage-dir", str(storage), "export", session_id,
         "--audience", "trainer", "--format", "markdown", "-o", str(out_md)]
    )
    assert rc == 0
    return store.get("candidates", session_id).payload


def _service_run(storage: Path) -> tuple[bytes, bytes]:
    """Same workflow through the HTTP API; returns (candidates JSONL, markdown)."""
    from fastapi.testclient import TestClient

    from docquiz.service.app import create_app
    from docquiz.service.config import ServiceConfig

    app = create_app(ServiceConfig(storage_dir=str(storage)))
    with TestClient(app) as client:
        r = client.post(
            "/documents",
            files={"file": ("procedure.txt", (FIXTURES / "procedure.txt").read_bytes(), "text/plain")},
        )
        job_id = r.json()["job_id"]
        for _ in range(600):
            job = client.get(f"/jobs/{job_id}").json()
            if job["status"] in ("succeeded", "failed"):
                break
            time.sleep(0.01)
        assert job["status"] == "succeeded"
        doc_id = job["result_ref"]
        session = client.post("/sessions", json={"doc_id": doc_id}).json()
        tree = client.get(f"/documents/{doc_id}/sections").json()
        ids = [s["section_id"] for s in tree["sections"] if s["number"] in ("1", "2")]
        client.post(f"/sessions/{session['session_id']}/sections", json={"section_ids": ids})
        job_id = client.post(f"/sessions/{session['session_id']}/generate").json()["job_id"]
        for _ in range(600):
            job = client.get(f"/jobs/{job_id}").json()
            if job["status"] in ("succeeded", "failed"):
                break
            time.sleep(0.01)
        assert job["status"] == "succeeded"
        candidates = client.get(
            f"/sessions/{session['session_id']}/candidates", params={"status": "all"}
        ).content
        verified_ids = [
            json.loads(line)["candidate_id"]
            for line in client.get(
                f"/sessions/{session['session_id']}/candidates", params={"status": "verified"}
            ).text.splitlines()
        ]
        client.post(
            f"/sessions/{session['session_id']}/selections",
            json={"candidate_ids": verified_ids},
        )
        markdown = client.get(
            f"/sessions/{session['session_id']}/quiz",
            params={"audience": "trainer", "format": "markdown"},
        ).content
    return candidates, markdown


def test_c4_end_to_end_determinism(tmp_path):
    """Two CLI runs and the service path produce byte-identical artifacts."""
    with Timer(60.0):
        md_a, md_b = tmp_path / "a.md", tmp_path / "b.md"
        jsonl_a = _cli_run(tmp_path / "store-a", md_a)
        jsonl_b = _cli_run(tmp_path / "store-b", md_b)
        assert jsonl_a == jsonl_b
        assert md_a.read_bytes() == md_b.read_bytes()

        jsonl_svc, md_svc = _service_run(tmp_path / "store-svc")
        assert jsonl_svc == jsonl_a
        assert md_svc == md_a.read_bytes()


def test_c5_audience_separation(fixture_document, mock_backends):
    """100 random curations: trainee has zero answer lines, trainer is complete."""
    from docquiz.quiz import build_quiz, quiz_title, render_quiz, select_questions
    from docquiz.quiz.session import CurationSession
    from docquiz.verify import AnswerabilityPolicy, verify_all

    with Timer(30.0):
        structure = segment(fixture_document)
        passages, _ = enumerate_passages(structure, fixture_document, 480)
        run = generate_candidates(passages, mock_backends, GeneratorConfig())
        by_id = {p.passage_id: p for p in run.passages}
        verified, _ = verify_all(run.pool, by_id, mock_backends.qa, AnswerabilityPolicy())
        verified_by_id = {v.candidate_id: v for v in verified}
        pool = [v.candidate_id for v in verified]
        status = {c.candidate_id: c.status for c in run.candidates}
        assert len(pool) >= 5

        rng = random.Random(99)
        for i in range(100):
            picks = rng.sample(pool, rng.randint(1, len(pool)))
            session = CurationSession(
                session_id=f"sess{i:03d}",
                doc_id=structure.doc_id,
                state="generated",
                config=GeneratorConfig(),
                candidate_pool=list(pool),
            )
            select_questions(session, picks, status)
            quiz = build_quiz(
                session, run.by_id(), verified_by_id, by_id, structure,
                quiz_title("procedure.txt"),
            )
            trainee = render_quiz(session, quiz, "trainee")
            trainer = render_quiz(session, quiz, "trainer")

            assert not re.search(r"^\*\*A\.\*\* ", trainee, re.M)
            numbered = re.findall(r"^\d+\. ", trainee, re.M)
            assert len(numbered) == len(picks)
            for item in quiz.items:
                assert f"\n**A.** {item.answer_text}\n" not in trainee
                assert f"**Q{item.index}.** {item.question_text}" in trainer
                assert f"**A.** {item.answer_text}" in trainer
                assert f"> {item.passage_excerpt}" in trainer
                assert f"— §{item.section_number} {item.section_title}" in trainer


def test_c6_segmentation_soundness():
    """200 random synthetic documents: invariants hold, line coverage 100%."""
    with Timer(30.0):
        budget = 64
        for seed in range(200):
            rng = random.Random(961_748_900 + seed)
            doc = strip_boilerplate(build_random_document(rng))
            structure = segment(doc)
            validate_structure(structure)
            passages, dropped = enumerate_passages(structure, None, budget)

            passage_texts = [normalize_ws(p.text) for p in passages]
            dropped_texts = [normalize_ws(d.sentence) for d in dropped]
            covered = 0
            eligible = 0
            dropped_lines = 0
            for page in doc.pages:
                for line in page.lines:
                    if not line.strip() or match_heading(line):
                        continue
                    eligible += 1
                    norm = normalize_ws(line)
                    hits = sum(norm in t for t in passage_texts)
                    if hits == 1:
                        covered += 1
                    elif any(norm in t for t in dropped_texts):
                        dropped_lines += 1
            assert dropped_lines == len(dropped)
            assert covered == eligible - dropped_lines, f"seed {seed}: coverage gap"


def _random_answer_pair(rng: random.Random) -> tuple[str, str]:
    vocab = (
        "root cause identification project manager service review board "
        "anomaly report closure item configuration the of a supplier waiver"
    ).split()
    def phrase():
        return " ".join(rng.choice(vocab) for _ in range(rng.randint(0, 8)))
    a, b = phrase(), phrase()
    if rng.random() < 0.3:  # force overlap-heavy pairs
        b = " ".join([a, phrase()]).strip()
    return a, b


def test_c7_roundtrip_f1_oracle():
    """1,000 random pairs: implementation equals brute force to 1e-9."""
    with Timer(5.0):
        value = token_f1("Project Manager", "OPS Project Manager or Service Manager")
        assert value == pytest.approx(0.5, abs=1e-9)

        rng = random.Random(77)
        for _ in range(1000):
            a, b = _random_answer_pair(rng)
            assert token_f1(a, b) == pytest.approx(oracle_token_f1(a, b), abs=1e-9)


def _random_parenthetical_text(rng: random.Random) -> str:
    pieces = []
    for _ in range(rng.randint(1, 12)):
        roll = rng.random()
        if roll < 0.25:
            pieces.append(rng.choice(["(", ")"]) if rng.random() < 0.3 else
                          "(" + rng.choice(["e.g. x y", "i.e. z", "for example w", "such as v", "note q"]) + ")")
        elif roll < 0.35:
            pieces.append(rng.choice(["(", ")"]))
        else:
            pieces.append(rng.choice(["alpha", "bravo", "charlie", "delta", "e.g.", "such as"]))
    return " ".join(pieces)


def test_c8_parenthetical_stripping():
    """Inline-example fixture honored by the flag; idempotent on 1,000 texts."""
    with Timer(5.0):
        fixture = "Item configuration, in terms of implemented functions (e.g. software version 2.0)"
        stripped = strip_parentheticals(fixture)
        assert stripped == "Item configuration, in terms of implemented functions"
        assert "software version 2.0" not in stripped

        # Flag off: the pipeline leaves passages untouched.
        from docquiz.ingest import extract_text
        doc = extract_text(f"1 Records\n{fixture}.".encode(), "plain_text")
        structure = segment(doc)
        passages, _ = enumerate_passages(structure, doc, 480)
        assert "(e.g. software version 2.0)" in passages[0].text

        from docquiz.ingest import strip_passage
        assert "software version 2.0" not in strip_passage(passages[0]).text

        rng = random.Random(31337)
        for _ in range(1000):
            text = _random_parenthetical_text(rng)
            once = strip_parentheticals(text)
            assert strip_parentheticals(once) == once


SMOKE_QG = os.environ.get("DOCQUIZ_SMOKE_QG_DIR")
SMOKE_QA = os.environ.get("DOCQUIZ_SMOKE_QA_DIR")


@pytest.mark.skipif(
    not (SMOKE_QG and SMOKE_QA),
    reason="operator-supplied checkpoints required: set DOCQUIZ_SMOKE_QG_DIR and "
    "DOCQUIZ_SMOKE_QA_DIR to local SQuAD-fine-tuned model directories",
)
def test_c9_real_backend_smoke():
    """Best effort, model-dependent: supplier-waiver QA pair reproduction."""
    from docquiz.backends.contracts import answer
    from docquiz.backends.registry import BackendRegistry, BackendSpec

    registry = BackendRegistry([
        BackendSpec("real-qg", "generative", "transformers", {"model_dir": SMOKE_QG}),
        BackendSpec("real-qa", "qa", "transformers", {"model_dir": SMOKE_QA}),
        BackendSpec("mock-embed", "embedding", "mock"),
    ])
    qa = registry.resolve("real-qa")
    passage = (
        "Deviations are handled through waivers. A supplier waiver can be "
        "issued by the OPS Project Manager or Service Manager after review."
    )
    result = answer(qa, "Who can issue a supplier waiver?", passage)
    assert result.kind == "span"
    assert "OPS Project Manager or Service Manager" in result.span.text
