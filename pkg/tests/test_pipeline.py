from __future__ import annotations

import pytest

from docquiz.backends import default_mock_registry
from docquiz.backends.registry import BackendSpec, BackendRegistry, PipelineBackends
from docquiz.errors import BackendUnavailable
from docquiz.ingest import enumerate_passages, extract_text, segment
from docquiz.qgen import (
    CandidateQuestion,
    GeneratorConfig,
    from_jsonl,
    generate_candidates,
    to_jsonl,
)


def _passages(text: str, budget: int = 480):
    doc = extract_text(text.encode(), "plain_text")
    structure = segment(doc)
    passages, _ = enumerate_passages(structure, doc, budget)
    return passages


def test_candidate_list_is_byte_identical_across_runs(mock_backends, fixture_document):
    structure = segment(fixture_document)
    passages, _ = enumerate_passages(structure, fixture_document, 480)
    a = generate_candidates(list(passages), mock_backends, GeneratorConfig())
    b = generate_candidates(list(passages), mock_backends, GeneratorConfig())
    assert to_jsonl(a.candidates) == to_jsonl(b.candidates)


def test_jsonl_roundtrip(mock_backends):
    passages = _passages("1 S\nThe quality manager approves the plan.")
    run = generate_candidates(passages, mock_backends, GeneratorConfig())
    restored = from_jsonl(to_jsonl(run.candidates))
    assert restored == run.candidates


def test_candidates_reference_existing_passages(mock_backends, fixture_document):
    structure = segment(fixture_document)
    passages, _ = enumerate_passages(structure, fixture_document, 480)
    run = generate_candidates(passages, mock_backends, GeneratorConfig())
    known = {p.passage_id for p in run.passages}
    assert run.candidates
    for cand in run.candidates:
        assert cand.passage_id in known
        if cand.status == "rejected_duplicate":
            earlier = next(c for c in run.candidates if c.candidate_id == cand.duplicate_of)
            assert run.candidates.index(earlier) < run.candidates.index(cand)
            assert earlier.status != "rejected_duplicate"


def test_seed_spans_are_exact_passage_substrings(mock_backends, fixture_document):
    structure = segment(fixture_document)
    passages, _ = enumerate_passages(structure, fixture_document, 480)
    run = generate_candidates(passages, mock_backends, GeneratorConfig())
    by_id = {p.passage_id: p for p in run.passages}
    aware = [c for c in run.candidates if c.strategy == "answer_aware"]
    assert aware
    for cand in aware:
        seed = cand.seed_answer
        assert by_id[cand.passage_id].text[seed.start_char:seed.end_char] == seed.text


def test_cap_alternates_strategies(mock_backends):
    # Threshold 1.0 lets near-duplicates through so the cap, not dedup,
    # decides; only exact duplicates would still be rejected.
    text = "1 S\n" + " ".join(
        f"The {name} Board reviews the {topic} records carefully."
        for name, topic in [
            ("Alpha", "orbit"), ("Bravo", "launch"), ("Charlie", "ground"),
            ("Delta", "fuel"), ("Echo", "telemetry"),
        ]
    )
    passages = _passages(text)
    config = GeneratorConfig(questions_per_passage_cap=4, dedup_threshold=1.0)
    run = generate_candidates(passages, mock_backends, config)
    assert len(run.candidates) == 10  # 5 seeds + 5 declarative sentences
    assert len(run.pool) == 4
    strategies = [c.strategy for c in run.pool]
    assert strategies.count("answer_aware") == 2
    assert strategies.count("answer_agnostic") == 2
    # Canonical order is preserved in the pool.
    ids = [c.candidate_id for c in run.pool]
    assert ids == sorted(ids)


def test_cap_fills_from_other_strategy_when_one_runs_out(mock_backends):
    passages = _passages("1 S\nThe Alpha Board reviews records. The Bravo Team signs forms.")
    config = GeneratorConfig(questions_per_passage_cap=3, strategies=("answer_agnostic",))
    run = generate_candidates(passages, mock_backends, config)
    assert all(c.strategy == "answer_agnostic" for c in run.pool)


def test_strategy_subset_config(mock_backends):
    passages = _passages("1 S\nThe quality manager approves the plan.")
    run = generate_candidates(
        passages, mock_backends, GeneratorConfig(strategies=("answer_aware",))
    )
    assert run.candidates
    assert all(c.strategy == "answer_aware" for c in run.candidates)


def test_failing_generative_backend_records_warning_and_continues():
    class _Down:
        backend_id = "down"
        context_budget_tokens = 512
        max_concurrent_calls = 1

        def run_generate(self, request):
            raise BackendUnavailable("gone")

    mocks = default_mock_registry().pipeline_backends()
    backends = PipelineBackends(
        answer_aware=_Down(), answer_agnostic=mocks.answer_agnostic,
        qa=mocks.qa, embedding=mocks.embedding,
    )
    passages = _passages("1 S\nThe quality manager approves the plan.")
    run = generate_candidates(passages, backends, GeneratorConfig())
    assert any("answer_aware failed" in w for w in run.warnings)
    assert run.candidates  # agnostic strategy still produced output
    assert all(c.strategy == "answer_agnostic" for c in run.candidates)


def test_strip_parentheticals_config_rewrites_passages(mock_backends):
    passages = _passages("1 S\nThe register lists functions (e.g. version 2.0) for audit.")
    run = generate_candidates(
        passages, mock_backends, GeneratorConfig(strip_parentheticals=True)
    )
    assert all(p.preprocessed for p in run.passages)
    assert all("version 2.0" not in p.text for p in run.passages)
    # Seed offsets refer to the preprocessed text.
    for cand in run.candidates:
        if cand.seed_answer:
            p = next(p for p in run.passages if p.passage_id == cand.passage_id)
            assert p.text[cand.seed_answer.start_char:cand.seed_answer.end_char] == cand.seed_answer.text


# --- registry ---

def test_registry_roundtrip(tmp_path):
    import json

    path = tmp_path / "registry.json"
    path.write_text(json.dumps([
        {"backend_id": "qg-aware", "kind": "generative", "adapter": "mock",
         "parameters": {"strategy": "answer_aware"}},
        {"backend_id": "qg-agnostic", "kind": "generative", "adapter": "mock",
         "parameters": {"strategy": "answer_agnostic"}},
        {"backend_id": "qa-1", "kind": "qa", "adapter": "mock"},
        {"backend_id": "emb-1", "kind": "embedding", "adapter": "mock"},
    ]))
    registry = BackendRegistry.from_file(path)
    backends = registry.pipeline_backends()
    assert backends.answer_aware.backend_id == "qg-aware"
    assert backends.answer_agnostic.backend_id == "qg-agnostic"
    assert backends.qa.backend_id == "qa-1"
    assert registry.resolve("qa-1") is registry.resolve("qa-1")


def test_registry_unknown_backend_or_adapter():
    registry = BackendRegistry([BackendSpec("x", "qa", "no-such-adapter")])
    with pytest.raises(BackendUnavailable):
        registry.resolve("missing")
    with pytest.raises(BackendUnavailable):
        registry.resolve("x")


def test_registry_missing_kind():
    registry = BackendRegistry([BackendSpec("g", "generative", "mock")])
    with pytest.raises(BackendUnavailable):
        registry.pipeline_backends()


def test_default_mock_registry_serves_both_strategies():
    backends = default_mock_registry().pipeline_backends()
    assert backends.answer_aware is backends.answer_agnostic
    assert backends.answer_aware.max_concurrent_calls >= 1
