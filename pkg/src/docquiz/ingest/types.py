"""Domain types for document ingestion: raw pages, section tree, passages."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

MIME_PDF = "pdf"
MIME_PLAIN = "plain_text"
MIME_MARKDOWN = "markdown"
SUPPORTED_MIMES = (MIME_PDF, MIME_PLAIN, MIME_MARKDOWN)

#: Default per-passage token budget; leaves headroom under common 512-token
#: encoder limits (whitespace-split approximation).
DEFAULT_MAX_PASSAGE_TOKENS = 480


def compute_doc_id(raw: bytes) -> str:
    """Content hash of the raw input bytes; identical bytes give the same id."""
    return hashlib.sha256(raw).hexdigest()


@dataclass(frozen=True)
class PageText:
    page_index: int
    lines: tuple[str, ...]


@dataclass(frozen=True)
class SourceDocument:
    doc_id: str
    filename: str
    mime: str
    pages: tuple[PageText, ...]

    def __post_init__(self) -> None:
        if self.mime not in SUPPORTED_MIMES:
            raise ValueError(f"unsupported mime {self.mime!r}")
        for i, page in enumerate(self.pages):
            if page.page_index != i:
                raise ValueError("page indices must be contiguous from 0")


@dataclass(frozen=True)
class ParagraphBlock:
    """A blank-line-delimited text block attached to one section."""

    page_index: int
    start_line: int
    end_line: int  # inclusive
    text: str


@dataclass
class Section:
    section_id: str
    number: str  # dotted numeral string, e.g. "3.1"; "0" for front matter
    title: str
    depth: int
    passages: list[str] = field(default_factory=list)
    children: list[str] = field(default_factory=list)
    paragraphs: list[ParagraphBlock] = field(default_factory=list)


@dataclass
class DocumentStructure:
    doc_id: str
    sections: list[Section]

    def section_by_id(self, section_id: str) -> Section:
        for sec in self.sections:
            if sec.section_id == section_id:
                return sec
        raise KeyError(section_id)

    def section_ids(self) -> list[str]:
        return [sec.section_id for sec in self.sections]


@dataclass(frozen=True)
class Passage:
    passage_id: str
    doc_id: str
    section_id: str
    text: str
    source_span: tuple[int, int, int]  # (page_index, start_line, end_line)
    approx_tokens: int
    preprocessed: bool = False


@dataclass(frozen=True)
class DroppedSentence:
    """Record of an OversizedSentence drop during passage enumeration."""

    section_id: str
    source_span: tuple[int, int, int]
    sentence: str
    approx_tokens: int
