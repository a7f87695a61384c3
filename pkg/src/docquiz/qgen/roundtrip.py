"""Round-trip consistency: does QA recover the seed answer from the question?

The score is recorded on the candidate and surfaced to the trainer as a
warning badge when it falls below the configured threshold; it never rejects
a candidate by itself. The answerability filter is the authoritative gate.
"""

from __future__ import annotations

from collections import Counter

from ..backends.contracts import QABackend, answer
from ..ingest.types import Passage
from ..textutil import word_tokens
from .candidates import CandidateQuestion
from .config import STRATEGY_ANSWER_AWARE


def token_f1(predicted: str, gold: str) -> float:
    """Token-level F1 after lowercasing and punctuation stripping.

    Token overlap is counted as a multiset intersection. Two normalization-
    empty strings score 1.0; exactly one empty scores 0.0.
    """
    pred = word_tokens(predicted)
    ref = word_tokens(gold)
    if not pred and not ref:
        return 1.0
    if not pred or not ref:
        return 0.0
    overlap = sum((Counter(pred) & Counter(ref)).values())
    if overlap == 0:
        return 0.0
    precision = overlap / len(pred)
    recall = overlap / len(ref)
    return 2 * precision * recall / (precision + recall)


def roundtrip_consistency(
    candidate: CandidateQuestion,
    passage: Passage,
    qa_backend: QABackend,
) -> float:
    """Token F1 between the QA-extracted answer and the seed; 0 on no-answer.

    Stores the score in ``candidate.roundtrip_f1``.
    """
    if candidate.strategy != STRATEGY_ANSWER_AWARE or candidate.seed_answer is None:
        raise ValueError("round-trip check applies to answer-aware candidates only")
    result = answer(qa_backend, candidate.question_text, passage.text)
    if result.kind != "span":
        score = 0.0
    else:
        score = token_f1(result.span.text, candidate.seed_answer.text)
    candidate.roundtrip_f1 = score
    return score
