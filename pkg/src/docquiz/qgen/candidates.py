"""Candidate question records, canonical ordering, and JSONL serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .config import STRATEGY_ANSWER_AWARE

STATUS_GENERATED = "generated"
STATUS_REJECTED_DUPLICATE = "rejected_duplicate"
STATUS_VERIFIED = "verified"
STATUS_REJECTED_NO_ANSWER = "rejected_no_answer"


@dataclass(frozen=True)
class SeedAnswer:
    text: str
    start_char: int
    end_char: int


@dataclass
class CandidateQuestion:
    candidate_id: str
    passage_id: str
    question_text: str
    strategy: str
    backend_id: str
    beam_score: float
    beam_rank: int
    seed_answer: SeedAnswer | None = None
    roundtrip_f1: float | None = None
    status: str = STATUS_GENERATED
    duplicate_of: str | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "candidate_id": self.candidate_id,
            "passage_id": self.passage_id,
            "question_text": self.question_text,
            "strategy": self.strategy,
            "backend_id": self.backend_id,
            "beam_score": self.beam_score,
            "beam_rank": self.beam_rank,
            "seed_answer": (
                {
                    "text": self.seed_answer.text,
                    "start_char": self.seed_answer.start_char,
                    "end_char": self.seed_answer.end_char,
                }
                if self.seed_answer
                else None
            ),
            "roundtrip_f1": self.roundtrip_f1,
            "status": self.status,
            "duplicate_of": self.duplicate_of,
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CandidateQuestion":
        seed = data.get("seed_answer")
        return cls(
            candidate_id=data["candidate_id"],
            passage_id=data["passage_id"],
            question_text=data["question_text"],
            strategy=data["strategy"],
            backend_id=data["backend_id"],
            beam_score=data["beam_score"],
            beam_rank=data["beam_rank"],
            seed_answer=SeedAnswer(seed["text"], seed["start_char"], seed["end_char"]) if seed else None,
            roundtrip_f1=data.get("roundtrip_f1"),
            status=data.get("status", STATUS_GENERATED),
            duplicate_of=data.get("duplicate_of"),
            error=data.get("error"),
        )


def canonical_sort(
    candidates: list[CandidateQuestion], passage_order: dict[str, int]
) -> list[CandidateQuestion]:
    """Fix the global candidate order.

    Key: (passage position in document order, answer-aware before agnostic,
    seed span start, beam rank). The dedup scan's "previous one" semantics
    depend on this order, so it is pinned here once.
    """
    def key(cand: CandidateQuestion):
        return (
            passage_order[cand.passage_id],
            0 if cand.strategy == STRATEGY_ANSWER_AWARE else 1,
            cand.seed_answer.start_char if cand.seed_answer else -1,
            cand.beam_rank,
        )

    return sorted(candidates, key=key)


def assign_candidate_ids(candidates: list[CandidateQuestion]) -> None:
    """Sequential ids over the canonically ordered list."""
    for idx, cand in enumerate(candidates, start=1):
        cand.candidate_id = f"c{idx:04d}"


def to_jsonl(candidates: list[CandidateQuestion]) -> bytes:
    lines = [
        json.dumps(c.to_dict(), sort_keys=True, ensure_ascii=False, separators=(",", ":"))
        for c in candidates
    ]
    return ("\n".join(lines) + "\n" if lines else "").encode("utf-8")


def from_jsonl(payload: bytes) -> list[CandidateQuestion]:
    out = []
    for line in payload.decode("utf-8").splitlines():
        if line.strip():
            out.append(CandidateQuestion.from_dict(json.loads(line)))
    return out
