"""Document ingestion: extraction, boilerplate removal, segmentation, passages."""

from .boilerplate import strip_boilerplate
from .extract import extract_text, mime_for_filename
from .passages import enumerate_passages, strip_parentheticals, strip_passage
from .pdftext import PdfTextExtractor, SimplePdfTextExtractor
from .segment import expand_section_ids, match_heading, segment, validate_structure
from .types import (
    DEFAULT_MAX_PASSAGE_TOKENS,
    MIME_MARKDOWN,
    MIME_PDF,
    MIME_PLAIN,
    DocumentStructure,
    DroppedSentence,
    PageText,
    ParagraphBlock,
    Passage,
    Section,
    SourceDocument,
    compute_doc_id,
)

__all__ = [
    "DEFAULT_MAX_PASSAGE_TOKENS",
    "MIME_MARKDOWN",
    "MIME_PDF",
    "MIME_PLAIN",
    "DocumentStructure",
    "DroppedSentence",
    "PageText",
    "ParagraphBlock",
    "Passage",
    "PdfTextExtractor",
    "Section",
    "SimplePdfTextExtractor",
    "SourceDocument",
    "compute_doc_id",
    "enumerate_passages",
    "expand_section_ids",
    "extract_text",
    "match_heading",
    "mime_for_filename",
    "segment",
    "strip_boilerplate",
    "strip_parentheticals",
    "strip_passage",
    "validate_structure",
]
