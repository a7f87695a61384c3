"""Candidate generation via the answer-aware and answer-agnostic strategies."""

from __future__ import annotations

from ..backends.contracts import GenerationRequest, generate
from ..backends.prompts import build_answer_agnostic_prompt, build_answer_aware_prompt
from ..ingest.types import Passage
from .candidates import CandidateQuestion, SeedAnswer
from .config import (
    STRATEGY_ANSWER_AGNOSTIC,
    STRATEGY_ANSWER_AWARE,
    GeneratorConfig,
)

MIN_QUESTION_TOKENS = 4


def postprocess_question(text: str) -> str | None:
    """Normalize a raw generation into a question, or None to drop it.

    Trims, collapses whitespace, guarantees a terminal question mark, and
    drops degenerate generations shorter than four tokens.
    """
    cleaned = " ".join(text.split()).strip()
    cleaned = cleaned.rstrip(".?! ")
    if not cleaned:
        return None
    cleaned = cleaned + "?"
    if len(cleaned.split()) < MIN_QUESTION_TOKENS:
        return None
    return cleaned


def generate_answer_aware(
    passage: Passage,
    seed: tuple[str, int, int],
    backend,
    config: GeneratorConfig,
) -> list[CandidateQuestion]:
    """Questions conditioned on one seed span; backend errors propagate."""
    seed_text, start, end = seed
    if passage.text[start:end] != seed_text:
        raise ValueError("seed offsets do not match passage text")
    prompt = build_answer_aware_prompt(passage.text, start, end)
    request = GenerationRequest(
        input_text=prompt,
        num_beams=config.num_beams,
        num_return_sequences=1,
        max_output_tokens=config.max_output_tokens,
    )
    sequences = generate(backend, request)
    out = []
    for seq in sequences:
        question = postprocess_question(seq.text)
        if question is None:
            continue
        out.append(
            CandidateQuestion(
                candidate_id="",
                passage_id=passage.passage_id,
                question_text=question,
                strategy=STRATEGY_ANSWER_AWARE,
                backend_id=backend.backend_id,
                beam_score=seq.score,
                beam_rank=seq.beam_rank,
                seed_answer=SeedAnswer(seed_text, start, end),
            )
        )
    return out


def generate_answer_agnostic(
    passage: Passage,
    backend,
    config: GeneratorConfig,
) -> list[CandidateQuestion]:
    """Questions from the passage alone; backend errors propagate."""
    request = GenerationRequest(
        input_text=build_answer_agnostic_prompt(passage.text),
        num_beams=config.num_beams,
        num_return_sequences=config.num_beams,
        max_output_tokens=config.max_output_tokens,
    )
    sequences = generate(backend, request)
    out = []
    for seq in sequences:
        question = postprocess_question(seq.text)
        if question is None:
            continue
        out.append(
            CandidateQuestion(
                candidate_id="",
                passage_id=passage.passage_id,
                question_text=question,
                strategy=STRATEGY_ANSWER_AGNOSTIC,
                backend_id=backend.backend_id,
                beam_score=seq.score,
                beam_rank=seq.beam_rank,
            )
        )
    return out
