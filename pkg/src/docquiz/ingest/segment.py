"""Heading detection and section tree construction.

The heading grammar is a fixed regex, not a learned model: a line whose
numbering prefix is dotted numerals (at most 12 characters) followed by a
title of at most 120 characters. Paragraphs are blank-line-delimited blocks
attached to the nearest preceding section; anything before the first heading
lands in an implicit "0 Front matter" section.
"""

from __future__ import annotations

import re

from .types import DocumentStructure, ParagraphBlock, Section, SourceDocument

HEADING_RE = re.compile(r"^(\d+(?:\.\d+)*)\s+(\S.*)$")
MAX_NUMBERING_CHARS = 12
MAX_TITLE_CHARS = 120

FRONT_MATTER_NUMBER = "0"
FRONT_MATTER_TITLE = "Front matter"


def match_heading(line: str) -> tuple[str, str] | None:
    """Return (number, title) when the line is a heading, else None."""
    m = HEADING_RE.match(line.strip())
    if not m:
        return None
    number, title = m.group(1), m.group(2).strip()
    if len(number) > MAX_NUMBERING_CHARS or len(title) > MAX_TITLE_CHARS:
        return None
    return number, title


def segment(doc: SourceDocument) -> DocumentStructure:
    """Build the section tree and collect paragraph blocks per section.

    Expects a boilerplate-stripped document. Page boundaries close an open
    paragraph because a paragraph's source span lives on a single page.
    """
    sections: list[Section] = []
    front: Section | None = None
    # Stack of sections whose numbers may prefix upcoming headings.
    open_stack: list[Section] = []

    current: Section | None = None
    para_lines: list[str] = []
    para_start = 0
    para_page = 0

    def next_section_id() -> str:
        return f"s{len(sections):03d}"

    def ensure_front() -> Section:
        nonlocal front
        if front is None:
            front = Section(
                section_id=next_section_id(),
                number=FRONT_MATTER_NUMBER,
                title=FRONT_MATTER_TITLE,
                depth=1,
            )
            sections.append(front)
        return front

    def close_paragraph(end_line: int) -> None:
        nonlocal para_lines
        if not para_lines:
            return
        text = " ".join(part.strip() for part in para_lines).strip()
        para_lines = []
        if not text:
            return
        target = current if current is not None else ensure_front()
        target.paragraphs.append(
            ParagraphBlock(
                page_index=para_page,
                start_line=para_start,
                end_line=end_line,
                text=text,
            )
        )

    for page in doc.pages:
        close_paragraph(para_start + len(para_lines) - 1)
        for line_idx, line in enumerate(page.lines):
            if not line.strip():
                close_paragraph(line_idx - 1)
                continue
            heading = match_heading(line)
            if heading is not None:
                close_paragraph(line_idx - 1)
                number, title = heading
                section = Section(
                    section_id=next_section_id(),
                    number=number,
                    title=title,
                    depth=len(number.split(".")),
                )
                while open_stack and not number.startswith(open_stack[-1].number + "."):
                    open_stack.pop()
                if open_stack:
                    open_stack[-1].children.append(section.section_id)
                open_stack.append(section)
                sections.append(section)
                current = section
                continue
            if not para_lines:
                para_start = line_idx
                para_page = page.page_index
            para_lines.append(line)
        close_paragraph(len(page.lines) - 1)

    if not sections:
        ensure_front()

    return DocumentStructure(doc_id=doc.doc_id, sections=sections)


def expand_section_ids(structure: DocumentStructure, section_ids: list[str]) -> list[str]:
    """Chosen ids plus all descendants, in document order, without duplicates."""
    by_id = {sec.section_id: sec for sec in structure.sections}
    chosen: set[str] = set()

    def add(section_id: str) -> None:
        if section_id in chosen:
            return
        chosen.add(section_id)
        for child in by_id[section_id].children:
            add(child)

    for section_id in section_ids:
        add(section_id)
    return [sec.section_id for sec in structure.sections if sec.section_id in chosen]


def validate_structure(structure: DocumentStructure) -> None:
    """Assert the structural invariants; raises ValueError on violation."""
    by_id = {sec.section_id: sec for sec in structure.sections}
    if len(by_id) != len(structure.sections):
        raise ValueError("duplicate section ids")
    seen_passages: set[str] = set()
    for sec in structure.sections:
        if sec.depth != len(sec.number.split(".")):
            raise ValueError(f"depth mismatch for {sec.number!r}")
        for child_id in sec.children:
            child = by_id[child_id]
            if not child.number.startswith(sec.number + "."):
                raise ValueError(
                    f"child {child.number!r} does not extend parent {sec.number!r}"
                )
        for pid in sec.passages:
            if pid in seen_passages:
                raise ValueError(f"passage {pid} in more than one section")
            seen_passages.add(pid)
