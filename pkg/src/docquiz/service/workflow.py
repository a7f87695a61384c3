"""Storage-backed orchestration of the whole pipeline.

Both the CLI and the HTTP service drive this facade, so the two paths
produce byte-identical artifacts for identical inputs and configuration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..backends.registry import BackendRegistry, default_mock_registry
from ..errors import UnknownDocument
from ..evaluation import export_annotation_sheet
from ..ingest.boilerplate import strip_boilerplate
from ..ingest.extract import extract_text, mime_for_filename
from ..ingest.passages import enumerate_passages
from ..ingest.segment import segment
from ..ingest.serialize import (
    canonical_json_bytes,
    document_from_dict,
    document_to_dict,
    structure_from_dict,
    structure_to_dict,
)
from ..ingest.types import DEFAULT_MAX_PASSAGE_TOKENS
from ..qgen.candidates import from_jsonl, to_jsonl
from ..qgen.config import GeneratorConfig
from ..quiz.assembly import build_quiz, export_quiz, quiz_title
from ..quiz.session import (
    CurationSession,
    choose_sections,
    create_session,
    run_generation,
    select_questions,
)
from ..verify import AnswerabilityPolicy, verified_from_jsonl, verified_to_jsonl
from .store import (
    KIND_CANDIDATES,
    KIND_DOCUMENT,
    KIND_SESSION,
    KIND_STRUCTURE,
    KIND_VERIFIED,
    FileStore,
)


@dataclass
class IngestResult:
    doc_id: str
    filename: str
    n_sections: int
    n_passages: int
    n_dropped: int


class QuizWorkflow:
    def __init__(
        self,
        store: FileStore,
        registry: BackendRegistry | None = None,
        max_passage_tokens: int = DEFAULT_MAX_PASSAGE_TOKENS,
    ):
        self.store = store
        self.registry = registry or default_mock_registry()
        self.max_passage_tokens = max_passage_tokens

    # --- ingestion ---

    def ingest_bytes(self, raw: bytes, filename: str, mime: str | None = None) -> IngestResult:
        doc = extract_text(raw, mime or mime_for_filename(filename), filename=filename)
        doc = strip_boilerplate(doc)
        structure = segment(doc)
        passages, dropped = enumerate_passages(structure, doc, self.max_passage_tokens)
        self.store.put(KIND_DOCUMENT, doc.doc_id, canonical_json_bytes(document_to_dict(doc)))
        self.store.put(
            KIND_STRUCTURE,
            doc.doc_id,
            canonical_json_bytes(structure_to_dict(structure, passages, dropped)),
        )
        return IngestResult(
            doc_id=doc.doc_id,
            filename=filename,
            n_sections=len(structure.sections),
            n_passages=len(passages),
            n_dropped=len(dropped),
        )

    def load_document(self, doc_id: str):
        return document_from_dict(json.loads(self.store.get(KIND_DOCUMENT, doc_id).payload))

    def load_structure(self, doc_id: str):
        record = self.store.get(KIND_STRUCTURE, doc_id)
        return structure_from_dict(json.loads(record.payload))

    def section_tree(self, doc_id: str) -> dict:
        structure, _ = self.load_structure(doc_id)
        return {
            "doc_id": doc_id,
            "sections": [
                {
                    "section_id": sec.section_id,
                    "number": sec.number,
                    "title": sec.title,
                    "depth": sec.depth,
                    "children": list(sec.children),
                    "n_passages": len(sec.passages),
                }
                for sec in structure.sections
            ],
        }

    # --- sessions ---

    def create_session(self, doc_id: str, config: GeneratorConfig) -> CurationSession:
        structure = None
        if self.store.exists(KIND_STRUCTURE, doc_id):
            structure, _ = self.load_structure(doc_id)
        session = create_session(doc_id, config, structure)
        self._save_session(session, expected_version=0)
        return session

    def load_session(self, session_id: str) -> tuple[CurationSession, int]:
        record = self.store.get(KIND_SESSION, session_id)
        return CurationSession.from_dict(json.loads(record.payload)), record.version

    def _save_session(self, session: CurationSession, expected_version: int) -> None:
        self.store.put(
            KIND_SESSION,
            session.session_id,
            canonical_json_bytes(session.to_dict()),
            expected_version=expected_version,
        )

    def choose_sections(self, session_id: str, section_ids: list[str]) -> CurationSession:
        session, version = self.load_session(session_id)
        structure, _ = self.load_structure(session.doc_id)
        choose_sections(session, section_ids, structure)
        self._save_session(session, version)
        return session

    def choose_sections_by_number(self, session_id: str, numbers: list[str]) -> CurationSession:
        session, _ = self.load_session(session_id)
        structure, _ = self.load_structure(session.doc_id)
        by_number = {sec.number: sec.section_id for sec in structure.sections}
        ids = []
        for number in numbers:
            ids.append(by_number.get(number, number))
        return self.choose_sections(session_id, ids)

    def run_generation(self, session_id: str, progress=None) -> CurationSession:
        session, version = self.load_session(session_id)
        structure, _ = self.load_structure(session.doc_id)
        backends = self.registry.pipeline_backends()
        outcome = run_generation(
            session,
            structure,
            backends,
            policy=AnswerabilityPolicy(),
            max_passage_tokens=self.max_passage_tokens,
            progress=progress,
        )
        self.store.put(KIND_CANDIDATES, session_id, to_jsonl(outcome.run.candidates))
        self.store.put(
            KIND_VERIFIED,
            session_id,
            verified_to_jsonl(outcome.verified, outcome.run.by_id()),
        )
        self._save_session(session, version)
        return session

    def candidates(self, session_id: str, status: str = "all") -> list[dict]:
        session, _ = self.load_session(session_id)
        payload = self.store.get(KIND_CANDIDATES, session_id).payload
        rows = [c.to_dict() for c in from_jsonl(payload)]
        if status != "all":
            rows = [r for r in rows if r["status"] == status]
        return rows

    def candidates_jsonl(self, session_id: str, status: str = "all") -> bytes:
        """Candidate rows as JSON lines; ``verified`` serves the merged rows
        (candidate fields plus extracted answer fields)."""
        if status == "verified":
            return self.store.get(KIND_VERIFIED, session_id).payload
        payload = self.store.get(KIND_CANDIDATES, session_id).payload
        if status == "all":
            return payload
        lines = [
            line
            for line in payload.decode("utf-8").splitlines()
            if line.strip() and json.loads(line)["status"] == status
        ]
        return ("\n".join(lines) + "\n" if lines else "").encode("utf-8")

    def structure_json(self, doc_id: str) -> bytes:
        """The canonical interchange document (sections tree + passages)."""
        return self.store.get(KIND_STRUCTURE, doc_id).payload

    def select(self, session_id: str, candidate_ids: list[str]) -> CurationSession:
        session, version = self.load_session(session_id)
        payload = self.store.get(KIND_CANDIDATES, session_id).payload
        status_by_id = {c.candidate_id: c.status for c in from_jsonl(payload)}
        select_questions(session, candidate_ids, status_by_id)
        self._save_session(session, version)
        return session

    # --- exports ---

    def _quiz_inputs(self, session: CurationSession):
        candidates = {
            c.candidate_id: c
            for c in from_jsonl(self.store.get(KIND_CANDIDATES, session.session_id).payload)
        }
        verified = {
            v.candidate_id: v
            for v in verified_from_jsonl(self.store.get(KIND_VERIFIED, session.session_id).payload)
        }
        structure, passages = self.load_structure(session.doc_id)
        passages_by_id = {p.passage_id: p for p in passages}
        # Generation may have preprocessed passages; the stored candidates
        # reference the processed text, so rebuild it the same way.
        if session.config.strip_parentheticals:
            from ..ingest.passages import strip_passage

            passages_by_id = {pid: strip_passage(p) for pid, p in passages_by_id.items()}
        return candidates, verified, passages_by_id, structure

    def export(self, session_id: str, audience: str, fmt: str) -> tuple[bytes, str, str]:
        """Returns (bytes, content_type, filename); first export seals the session."""
        from ..quiz.assembly import CONTENT_TYPES

        session, version = self.load_session(session_id)
        candidates, verified, passages_by_id, structure = self._quiz_inputs(session)
        document = self.load_document(session.doc_id)
        quiz = build_quiz(
            session,
            candidates,
            verified,
            passages_by_id,
            structure,
            quiz_title(document.filename),
        )
        state_before = session.state
        data, filename = export_quiz(session, quiz, audience, fmt)
        if session.state != state_before:
            self._save_session(session, version)
        return data, CONTENT_TYPES[fmt], filename

    def annotation_sheet(self, session_id: str) -> list[dict]:
        session, _ = self.load_session(session_id)
        candidates, verified, passages_by_id, _ = self._quiz_inputs(session)
        return export_annotation_sheet(session, candidates, verified, passages_by_id)


def structure_exists(workflow: QuizWorkflow, doc_id: str) -> None:
    if not workflow.store.exists(KIND_STRUCTURE, doc_id):
        raise UnknownDocument(f"document {doc_id} is not ingested")
