"""Answer verification: keep only questions the QA backend can answer.

Every surviving candidate is answered against its own passage. An extracted
span proves answerability and is recorded; a no-answer result (or a backend
failure -- fail closed) rejects the candidate. Answers are contiguous
passage spans by construction: extractive QA can only select a consecutive
token sequence, which also means answers split across text excerpts are a
documented limitation, not a bug.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .backends.contracts import QABackend, QAResult, answer
from .errors import BackendError
from .ingest.types import Passage
from .qgen.candidates import (
    STATUS_GENERATED,
    STATUS_REJECTED_NO_ANSWER,
    STATUS_VERIFIED,
    CandidateQuestion,
)


@dataclass(frozen=True)
class AnswerabilityPolicy:
    """Span-vs-no-answer decision margin; 0.0 keeps the backend's own tie point."""

    delta: float = 0.0


@dataclass(frozen=True)
class VerifiedCandidate:
    candidate_id: str
    answer_text: str
    answer_start_char: int
    answer_end_char: int
    answer_score: float
    no_answer_score: float

    def to_dict(self) -> dict:
        return {
            "candidate_id": self.candidate_id,
            "answer_text": self.answer_text,
            "answer_start_char": self.answer_start_char,
            "answer_end_char": self.answer_end_char,
            "answer_score": self.answer_score,
            "no_answer_score": self.no_answer_score,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerifiedCandidate":
        return cls(
            candidate_id=data["candidate_id"],
            answer_text=data["answer_text"],
            answer_start_char=data["answer_start_char"],
            answer_end_char=data["answer_end_char"],
            answer_score=data["answer_score"],
            no_answer_score=data["no_answer_score"],
        )


@dataclass
class RejectionReport:
    total: int = 0
    verified: int = 0
    rejected_no_answer: int = 0
    errors: int = 0

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "verified": self.verified,
            "rejected_no_answer": self.rejected_no_answer,
            "errors": self.errors,
        }


def decide_answerable(result: QAResult, policy: AnswerabilityPolicy) -> bool:
    """True iff a span was produced and clearly beats the no-answer option.

    Ties reject: extractive models over-answer unanswerable questions, so
    the boundary resolves conservatively.
    """
    if result.kind != "span":
        return False
    return result.span_score > result.no_answer_score + policy.delta


def verify_candidate(
    candidate: CandidateQuestion,
    passage: Passage,
    qa_backend: QABackend,
    policy: AnswerabilityPolicy,
) -> VerifiedCandidate | None:
    """Answer the candidate's question from its passage and set its status.

    Backend failures reject the candidate with an error annotation so an
    unverifiable question can never reach the trainer.
    """
    if candidate.status != STATUS_GENERATED:
        raise ValueError(f"candidate {candidate.candidate_id} is not pending verification")
    try:
        result = answer(qa_backend, candidate.question_text, passage.text)
    except BackendError as exc:
        candidate.status = STATUS_REJECTED_NO_ANSWER
        candidate.error = str(exc)
        return None
    if not decide_answerable(result, policy):
        candidate.status = STATUS_REJECTED_NO_ANSWER
        return None
    candidate.status = STATUS_VERIFIED
    span = result.span
    return VerifiedCandidate(
        candidate_id=candidate.candidate_id,
        answer_text=span.text,
        answer_start_char=span.start_char,
        answer_end_char=span.end_char,
        answer_score=result.span_score,
        no_answer_score=result.no_answer_score,
    )


def verify_all(
    candidates: list[CandidateQuestion],
    passages: Mapping[str, Passage],
    qa_backend: QABackend,
    policy: AnswerabilityPolicy,
) -> tuple[list[VerifiedCandidate], RejectionReport]:
    """Partition the (deduplicated, canonically ordered) candidates."""
    report = RejectionReport(total=len(candidates))
    verified: list[VerifiedCandidate] = []
    for cand in candidates:
        outcome = verify_candidate(cand, passages[cand.passage_id], qa_backend, policy)
        if outcome is not None:
            verified.append(outcome)
            report.verified += 1
        else:
            report.rejected_no_answer += 1
            if cand.error is not None:
                report.errors += 1
    return verified, report


def verified_to_jsonl(
    verified: list[VerifiedCandidate],
    candidates_by_id: Mapping[str, CandidateQuestion],
) -> bytes:
    """JSONL of candidate fields merged with the extracted answer fields."""
    lines = []
    for v in verified:
        row = candidates_by_id[v.candidate_id].to_dict()
        row.update(v.to_dict())
        lines.append(json.dumps(row, sort_keys=True, ensure_ascii=False, separators=(",", ":")))
    return ("\n".join(lines) + "\n" if lines else "").encode("utf-8")


def verified_from_jsonl(payload: bytes) -> list[VerifiedCandidate]:
    out = []
    for line in payload.decode("utf-8").splitlines():
        if line.strip():
            out.append(VerifiedCandidate.from_dict(json.loads(line)))
    return out
