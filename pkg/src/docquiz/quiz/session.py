"""Curation sessions: the trainer's stateful path from document to quiz.

The state machine moves strictly forward::

    created -> sections_chosen -> generated -> curated -> exported

One generation run per session keeps every quiz's provenance unambiguous;
re-tuning the configuration means a new session on the same document.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Mapping

from ..backends.registry import PipelineBackends
from ..errors import (
    DuplicateSelection,
    EmptySelection,
    InvalidState,
    NotVerified,
    PipelineFailed,
    UnknownCandidate,
    UnknownDocument,
    UnknownSection,
)
from ..ingest.passages import enumerate_passages
from ..ingest.segment import expand_section_ids
from ..ingest.types import (
    DEFAULT_MAX_PASSAGE_TOKENS,
    DocumentStructure,
    DroppedSentence,
    Passage,
)
from ..qgen.candidates import STATUS_VERIFIED, CandidateQuestion
from ..qgen.config import GeneratorConfig
from ..qgen.pipeline import GenerationRun, generate_candidates
from ..verify import AnswerabilityPolicy, RejectionReport, VerifiedCandidate, verify_all

STATE_CREATED = "created"
STATE_SECTIONS_CHOSEN = "sections_chosen"
STATE_GENERATED = "generated"
STATE_CURATED = "curated"
STATE_EXPORTED = "exported"

STATE_ORDER = (
    STATE_CREATED,
    STATE_SECTIONS_CHOSEN,
    STATE_GENERATED,
    STATE_CURATED,
    STATE_EXPORTED,
)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class CurationSession:
    session_id: str
    doc_id: str
    state: str
    config: GeneratorConfig
    selected_section_ids: list[str] = field(default_factory=list)
    candidate_pool: list[str] = field(default_factory=list)
    selections: list[str] = field(default_factory=list)
    rejection_report: dict | None = None
    created_at: str = field(default_factory=_now)
    updated_at: str = field(default_factory=_now)

    def touch(self) -> None:
        self.updated_at = _now()

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "doc_id": self.doc_id,
            "state": self.state,
            "config": self.config.to_dict(),
            "selected_section_ids": list(self.selected_section_ids),
            "candidate_pool": list(self.candidate_pool),
            "selections": list(self.selections),
            "rejection_report": self.rejection_report,
            "created_at": self.created_at,
            "updated_at": self.updated_at,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CurationSession":
        return cls(
            session_id=data["session_id"],
            doc_id=data["doc_id"],
            state=data["state"],
            config=GeneratorConfig.from_dict(data["config"]),
            selected_section_ids=list(data["selected_section_ids"]),
            candidate_pool=list(data["candidate_pool"]),
            selections=list(data["selections"]),
            rejection_report=data.get("rejection_report"),
            created_at=data["created_at"],
            updated_at=data["updated_at"],
        )


def _require_state(session: CurationSession, *allowed: str) -> None:
    if session.state not in allowed:
        raise InvalidState(
            f"session {session.session_id} is {session.state}; requires "
            + " or ".join(allowed)
        )


def create_session(
    doc_id: str,
    config: GeneratorConfig,
    structure: DocumentStructure | None,
) -> CurationSession:
    """New session for an ingested document; fails on an unknown document."""
    if structure is None or structure.doc_id != doc_id:
        raise UnknownDocument(f"document {doc_id} is not ingested")
    return CurationSession(
        session_id=uuid.uuid4().hex,
        doc_id=doc_id,
        state=STATE_CREATED,
        config=config,
    )


def choose_sections(
    session: CurationSession,
    section_ids: list[str],
    structure: DocumentStructure,
) -> CurationSession:
    """Limit generation to the chosen sections (descendants included later)."""
    _require_state(session, STATE_CREATED)
    if not section_ids:
        raise EmptySelection("at least one section is required")
    known = set(structure.section_ids())
    for section_id in section_ids:
        if section_id not in known:
            raise UnknownSection(f"no section {section_id!r} in document")
    session.selected_section_ids = list(dict.fromkeys(section_ids))
    session.state = STATE_SECTIONS_CHOSEN
    session.touch()
    return session


@dataclass
class GenerationOutcome:
    session: CurationSession
    run: GenerationRun
    verified: list[VerifiedCandidate]
    report: RejectionReport
    dropped: list[DroppedSentence]


def run_generation(
    session: CurationSession,
    structure: DocumentStructure,
    backends: PipelineBackends,
    policy: AnswerabilityPolicy | None = None,
    max_passage_tokens: int = DEFAULT_MAX_PASSAGE_TOKENS,
    progress: object | None = None,
) -> GenerationOutcome:
    """Run the full pipeline over the chosen sections; once per session.

    Passage enumeration covers the chosen sections and their descendants;
    parenthetical stripping and all downstream stages follow the session
    config. The session reaches ``generated`` when at least one passage was
    processed, otherwise the run fails.
    """
    _require_state(session, STATE_SECTIONS_CHOSEN)
    chosen = expand_section_ids(structure, session.selected_section_ids)
    scoped = DocumentStructure(
        doc_id=structure.doc_id,
        sections=[s for s in structure.sections if s.section_id in chosen],
    )

    passages, dropped = enumerate_passages(scoped, None, max_passage_tokens)
    if not passages:
        raise PipelineFailed("no passage could be processed in the chosen sections")

    if progress is not None:
        progress.set_total(len(passages) + 1)

    run = generate_candidates(passages, backends, session.config)
    if progress is not None:
        progress.advance(len(passages))

    passages_by_id = {p.passage_id: p for p in run.passages}
    verified, report = verify_all(
        run.pool, passages_by_id, backends.qa, policy or AnswerabilityPolicy()
    )
    if progress is not None:
        progress.advance(1)

    session.candidate_pool = [v.candidate_id for v in verified]
    session.rejection_report = report.to_dict()
    session.state = STATE_GENERATED
    session.touch()
    return GenerationOutcome(
        session=session, run=run, verified=verified, report=report, dropped=dropped
    )


def select_questions(
    session: CurationSession,
    candidate_ids: list[str],
    candidate_status: Mapping[str, str],
) -> CurationSession:
    """Record the trainer's picks, in the trainer's order."""
    _require_state(session, STATE_GENERATED)
    seen: set[str] = set()
    pool = set(session.candidate_pool)
    for candidate_id in candidate_ids:
        if candidate_id in seen:
            raise DuplicateSelection(f"candidate {candidate_id} selected twice")
        seen.add(candidate_id)
        if candidate_id not in candidate_status:
            raise UnknownCandidate(f"no candidate {candidate_id} in this session")
        if candidate_status[candidate_id] != STATUS_VERIFIED or candidate_id not in pool:
            raise NotVerified(f"candidate {candidate_id} is not a verified pool member")
    session.selections = list(candidate_ids)
    session.state = STATE_CURATED
    session.touch()
    return session
