"""Expert annotation records and accuracy metrics.

``question_valid`` is a single conjunctive judgment (relevant AND
grammatically correct); the free-form note keeps any nuance. The conditional
answer accuracy is computed over valid questions only and is reported as
absent (not zero) when no question was judged valid.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DuplicateAnnotation, EmptyAnnotations, InvalidState
from .ingest.types import Passage
from .qgen.candidates import CandidateQuestion
from .quiz.session import STATE_CREATED, STATE_SECTIONS_CHOSEN, CurationSession
from .verify import VerifiedCandidate

#: Optional failure taxonomy for incorrect pairs, for later error studies.
FAILURE_MODES = (
    "unanswerable_from_context",
    "example_extraction",
    "partial_answer",
    "unclear_source_text",
)


@dataclass(frozen=True)
class AnnotationRecord:
    candidate_id: str
    question_valid: bool
    answer_correct: bool
    annotator: str = "expert"
    note: str | None = None
    failure_mode: str | None = None

    def __post_init__(self) -> None:
        if self.failure_mode is not None and self.failure_mode not in FAILURE_MODES:
            raise ValueError(f"unknown failure mode {self.failure_mode!r}")


@dataclass(frozen=True)
class EvaluationReport:
    n_total: int
    n_question_valid: int
    n_answer_correct: int
    n_answer_correct_given_valid: int
    question_accuracy: float
    answer_accuracy: float
    answer_accuracy_given_valid: float | None

    def to_dict(self) -> dict:
        return {
            "n_total": self.n_total,
            "n_question_valid": self.n_question_valid,
            "n_answer_correct": self.n_answer_correct,
            "n_answer_correct_given_valid": self.n_answer_correct_given_valid,
            "question_accuracy": self.question_accuracy,
            "answer_accuracy": self.answer_accuracy,
            "answer_accuracy_given_valid": self.answer_accuracy_given_valid,
        }


def compute_metrics(records: Iterable[AnnotationRecord]) -> EvaluationReport:
    """Accuracy over all records plus the valid-question conditional.

    Order-invariant; one record per candidate is required.
    """
    records = list(records)
    if not records:
        raise EmptyAnnotations("no annotation records")
    seen: set[str] = set()
    for record in records:
        if record.candidate_id in seen:
            raise DuplicateAnnotation(f"candidate {record.candidate_id} annotated twice")
        seen.add(record.candidate_id)

    n_total = len(records)
    n_valid = sum(1 for r in records if r.question_valid)
    n_correct = sum(1 for r in records if r.answer_correct)
    n_correct_given_valid = sum(
        1 for r in records if r.question_valid and r.answer_correct
    )
    return EvaluationReport(
        n_total=n_total,
        n_question_valid=n_valid,
        n_answer_correct=n_correct,
        n_answer_correct_given_valid=n_correct_given_valid,
        question_accuracy=n_valid / n_total,
        answer_accuracy=n_correct / n_total,
        answer_accuracy_given_valid=(
            n_correct_given_valid / n_valid if n_valid > 0 else None
        ),
    )


def export_annotation_sheet(
    session: CurationSession,
    candidates: Mapping[str, CandidateQuestion],
    verified: Mapping[str, VerifiedCandidate],
    passages: Mapping[str, Passage],
) -> list[dict]:
    """One blank-judgment row per verified candidate, ready for the expert.

    The completed sheet feeds back into :func:`compute_metrics` through
    :func:`load_annotation_sheet`.
    """
    if session.state in (STATE_CREATED, STATE_SECTIONS_CHOSEN) or not session.candidate_pool:
        raise InvalidState("annotation sheet requires a generated, non-empty pool")
    rows = []
    for candidate_id in session.candidate_pool:
        cand = candidates[candidate_id]
        rows.append(
            {
                "candidate_id": candidate_id,
                "question": cand.question_text,
                "answer": verified[candidate_id].answer_text,
                "passage": passages[cand.passage_id].text,
                "question_valid": None,
                "answer_correct": None,
                "note": None,
            }
        )
    return rows


def load_annotation_sheet(data: list[dict] | str | bytes) -> list[AnnotationRecord]:
    """Parse a completed annotation sheet into records.

    Rows whose judgments are still null are skipped (partially filled sheets
    are allowed); booleans are required otherwise.
    """
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    records = []
    for row in data:
        if row.get("question_valid") is None and row.get("answer_correct") is None:
            continue
        records.append(
            AnnotationRecord(
                candidate_id=row["candidate_id"],
                question_valid=bool(row["question_valid"]),
                answer_correct=bool(row["answer_correct"]),
                annotator=row.get("annotator", "expert"),
                note=row.get("note"),
                failure_mode=row.get("failure_mode"),
            )
        )
    return records
