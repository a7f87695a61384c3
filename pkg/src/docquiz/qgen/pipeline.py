"""Orchestration of a full generation pass over a set of passages.

Generation across passages is independent work; the merged list is then
canonically ordered, deduplicated in a single sequential scan (its semantics
are order-dependent), round-trip scored, and capped per passage.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..backends.registry import PipelineBackends
from ..errors import BackendError
from ..ingest.passages import strip_passage
from ..ingest.types import Passage
from .candidates import (
    STATUS_GENERATED,
    CandidateQuestion,
    assign_candidate_ids,
    canonical_sort,
)
from .config import (
    STRATEGY_ANSWER_AGNOSTIC,
    STRATEGY_ANSWER_AWARE,
    GeneratorConfig,
)
from .dedup import dedup
from .generate import generate_answer_agnostic, generate_answer_aware
from .roundtrip import roundtrip_consistency
from .seeds import extract_answer_candidates


@dataclass
class GenerationRun:
    """Everything a generation pass produced, in canonical order."""

    passages: list[Passage]
    candidates: list[CandidateQuestion] = field(default_factory=list)
    pool: list[CandidateQuestion] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def by_id(self) -> dict[str, CandidateQuestion]:
        return {c.candidate_id: c for c in self.candidates}


def generate_candidates(
    passages: list[Passage],
    backends: PipelineBackends,
    config: GeneratorConfig,
) -> GenerationRun:
    """Run both strategies over the passages and post-process the merged list.

    ``pool`` holds the dedup survivors after the per-passage cap: the
    candidates that proceed to answer verification. A backend failure on one
    passage is recorded as a warning and skips that passage, never the run.
    """
    processed = [
        strip_passage(p) if config.strip_parentheticals else p for p in passages
    ]
    run = GenerationRun(passages=processed)

    for passage in processed:
        if STRATEGY_ANSWER_AWARE in config.strategies:
            try:
                seeds = extract_answer_candidates(
                    passage, backends.qa, config.seed_answers_per_passage
                )
                for seed in seeds:
                    batch = generate_answer_aware(
                        passage, seed, backends.answer_aware, config
                    )
                    if not batch:
                        run.warnings.append(
                            f"{passage.passage_id}: no usable answer-aware generation "
                            f"for seed at {seed[1]}"
                        )
                    run.candidates.extend(batch)
            except BackendError as exc:
                run.warnings.append(f"{passage.passage_id}: answer_aware failed: {exc}")
        if STRATEGY_ANSWER_AGNOSTIC in config.strategies:
            try:
                batch = generate_answer_agnostic(
                    passage, backends.answer_agnostic, config
                )
                run.candidates.extend(batch)
            except BackendError as exc:
                run.warnings.append(f"{passage.passage_id}: answer_agnostic failed: {exc}")

    passage_order = {p.passage_id: i for i, p in enumerate(processed)}
    run.candidates = canonical_sort(run.candidates, passage_order)
    assign_candidate_ids(run.candidates)

    kept = dedup(run.candidates, backends.embedding, config.dedup_threshold)
    capped = _apply_cap(kept, config.questions_per_passage_cap)

    passages_by_id = {p.passage_id: p for p in processed}
    for cand in capped:
        if cand.strategy == STRATEGY_ANSWER_AWARE:
            try:
                roundtrip_consistency(cand, passages_by_id[cand.passage_id], backends.qa)
            except BackendError as exc:
                run.warnings.append(f"{cand.candidate_id}: round-trip check failed: {exc}")

    run.pool = capped
    return run


def _apply_cap(kept: list[CandidateQuestion], cap: int) -> list[CandidateQuestion]:
    """Bound review load per passage.

    Within a passage, strategies alternate (answer-aware first), each
    contributing its highest-beam-score survivors first. Output preserves
    canonical order.
    """
    selected: set[int] = set()
    by_passage: dict[str, list[CandidateQuestion]] = {}
    for cand in kept:
        by_passage.setdefault(cand.passage_id, []).append(cand)

    for group in by_passage.values():
        aware = [c for c in group if c.strategy == STRATEGY_ANSWER_AWARE]
        agnostic = [c for c in group if c.strategy == STRATEGY_ANSWER_AGNOSTIC]
        aware.sort(key=lambda c: -c.beam_score)
        agnostic.sort(key=lambda c: -c.beam_score)
        picked: list[CandidateQuestion] = []
        queues = [aware, agnostic]
        turn = 0
        while len(picked) < cap and (queues[0] or queues[1]):
            queue = queues[turn % 2] or queues[(turn + 1) % 2]
            picked.append(queue.pop(0))
            turn += 1
        selected.update(id(c) for c in picked)

    return [c for c in kept if id(c) in selected]
