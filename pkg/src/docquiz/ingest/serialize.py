"""Canonical JSON interchange for documents, structures, and passages.

The same bytes-in gives the same bytes-out: keys are sorted and separators
fixed, so downstream golden tests can compare serialized output directly.
"""

from __future__ import annotations

import json
from typing import Any

from .types import (
    DocumentStructure,
    DroppedSentence,
    PageText,
    ParagraphBlock,
    Passage,
    Section,
    SourceDocument,
)


def canonical_json_bytes(obj: Any) -> bytes:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def document_to_dict(doc: SourceDocument) -> dict:
    return {
        "doc_id": doc.doc_id,
        "filename": doc.filename,
        "mime": doc.mime,
        "pages": [
            {"page_index": p.page_index, "lines": list(p.lines)} for p in doc.pages
        ],
    }


def document_from_dict(data: dict) -> SourceDocument:
    return SourceDocument(
        doc_id=data["doc_id"],
        filename=data["filename"],
        mime=data["mime"],
        pages=tuple(
            PageText(p["page_index"], tuple(p["lines"])) for p in data["pages"]
        ),
    )


def _section_to_dict(sec: Section) -> dict:
    return {
        "section_id": sec.section_id,
        "number": sec.number,
        "title": sec.title,
        "depth": sec.depth,
        "passages": list(sec.passages),
        "children": list(sec.children),
        "paragraphs": [
            {
                "page_index": p.page_index,
                "start_line": p.start_line,
                "end_line": p.end_line,
                "text": p.text,
            }
            for p in sec.paragraphs
        ],
    }


def _section_from_dict(data: dict) -> Section:
    return Section(
        section_id=data["section_id"],
        number=data["number"],
        title=data["title"],
        depth=data["depth"],
        passages=list(data["passages"]),
        children=list(data["children"]),
        paragraphs=[
            ParagraphBlock(
                page_index=p["page_index"],
                start_line=p["start_line"],
                end_line=p["end_line"],
                text=p["text"],
            )
            for p in data["paragraphs"]
        ],
    )


def passage_to_dict(passage: Passage) -> dict:
    return {
        "passage_id": passage.passage_id,
        "doc_id": passage.doc_id,
        "section_id": passage.section_id,
        "text": passage.text,
        "source_span": list(passage.source_span),
        "approx_tokens": passage.approx_tokens,
        "preprocessed": passage.preprocessed,
    }


def passage_from_dict(data: dict) -> Passage:
    return Passage(
        passage_id=data["passage_id"],
        doc_id=data["doc_id"],
        section_id=data["section_id"],
        text=data["text"],
        source_span=tuple(data["source_span"]),
        approx_tokens=data["approx_tokens"],
        preprocessed=data["preprocessed"],
    )


def structure_to_dict(
    structure: DocumentStructure,
    passages: list[Passage],
    dropped: list[DroppedSentence] | None = None,
) -> dict:
    return {
        "doc_id": structure.doc_id,
        "sections": [_section_to_dict(sec) for sec in structure.sections],
        "passages": [passage_to_dict(p) for p in passages],
        "dropped_sentences": [
            {
                "section_id": d.section_id,
                "source_span": list(d.source_span),
                "sentence": d.sentence,
                "approx_tokens": d.approx_tokens,
            }
            for d in (dropped or [])
        ],
    }


def structure_from_dict(data: dict) -> tuple[DocumentStructure, list[Passage]]:
    structure = DocumentStructure(
        doc_id=data["doc_id"],
        sections=[_section_from_dict(s) for s in data["sections"]],
    )
    passages = [passage_from_dict(p) for p in data["passages"]]
    return structure, passages
