"""Raw bytes -> SourceDocument for the supported input formats."""

from __future__ import annotations

from ..errors import CorruptDocument, UnsupportedFormat
from .pdftext import PdfTextExtractor, SimplePdfTextExtractor
from .types import (
    MIME_MARKDOWN,
    MIME_PDF,
    MIME_PLAIN,
    SUPPORTED_MIMES,
    PageText,
    SourceDocument,
    compute_doc_id,
)

_EXTENSION_MIMES = {
    ".pdf": MIME_PDF,
    ".md": MIME_MARKDOWN,
    ".markdown": MIME_MARKDOWN,
    ".txt": MIME_PLAIN,
    ".text": MIME_PLAIN,
}


def mime_for_filename(filename: str) -> str:
    lowered = filename.lower()
    for ext, mime in _EXTENSION_MIMES.items():
        if lowered.endswith(ext):
            return mime
    return MIME_PLAIN


def extract_text(
    raw_bytes: bytes,
    mime: str,
    filename: str = "",
    pdf_extractor: PdfTextExtractor | None = None,
) -> SourceDocument:
    """Extract per-page line lists in reading order.

    Plain text and markdown are decoded as UTF-8 and become a single page.
    PDFs go through the pluggable extractor (default:
    :class:`SimplePdfTextExtractor`).
    """
    if mime not in SUPPORTED_MIMES:
        raise UnsupportedFormat(f"unsupported format {mime!r}")
    if not raw_bytes:
        raise CorruptDocument("empty input")

    doc_id = compute_doc_id(raw_bytes)

    if mime in (MIME_PLAIN, MIME_MARKDOWN):
        try:
            text = raw_bytes.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorruptDocument(f"not valid UTF-8: {exc}") from exc
        pages = (PageText(0, tuple(text.splitlines())),)
        return SourceDocument(doc_id=doc_id, filename=filename, mime=mime, pages=pages)

    extractor = pdf_extractor or SimplePdfTextExtractor()
    page_lines = extractor.extract_pages(raw_bytes)
    pages = tuple(
        PageText(i, tuple(lines)) for i, lines in enumerate(page_lines)
    )
    return SourceDocument(doc_id=doc_id, filename=filename, mime=MIME_PDF, pages=pages)
