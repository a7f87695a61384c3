"""Removal of repeated page furniture (headers, footers, page numbers)."""

from __future__ import annotations

import re

from .types import PageText, SourceDocument

#: A line is boilerplate when its digit-masked form recurs in the same
#: position band on at least this fraction of pages.
RECURRENCE_THRESHOLD = 0.6

#: Lines inspected at the top and at the bottom of each page.
BAND_SIZE = 2

_DIGIT_RE = re.compile(r"\d+")


def _mask(line: str) -> str:
    """Digit-masked, whitespace-normalized form so page numbers match."""
    return _DIGIT_RE.sub("#", " ".join(line.split()))


def _band_indices(n_lines: int) -> tuple[set[int], set[int]]:
    top = set(range(min(BAND_SIZE, n_lines)))
    bottom = set(range(max(0, n_lines - BAND_SIZE), n_lines))
    return top, bottom


def strip_boilerplate(doc: SourceDocument) -> SourceDocument:
    """Drop header/footer lines recurring across pages; keep everything else.

    Recurrence is counted per band (top 2 lines vs bottom 2 lines) over the
    digit-masked line text. Single-page documents pass through unchanged:
    recurrence is impossible on one page.
    """
    if len(doc.pages) < 2:
        return doc

    n_pages = len(doc.pages)
    seen_in_band: dict[tuple[str, str], set[int]] = {}
    for page in doc.pages:
        top, bottom = _band_indices(len(page.lines))
        for band_name, indices in (("top", top), ("bottom", bottom)):
            for idx in indices:
                masked = _mask(page.lines[idx])
                if not masked:
                    continue
                seen_in_band.setdefault((band_name, masked), set()).add(page.page_index)

    recurring = {
        key for key, pages in seen_in_band.items()
        if len(pages) / n_pages >= RECURRENCE_THRESHOLD
    }

    new_pages = []
    for page in doc.pages:
        top, bottom = _band_indices(len(page.lines))
        kept = []
        for idx, line in enumerate(page.lines):
            masked = _mask(line)
            drop = (idx in top and ("top", masked) in recurring) or (
                idx in bottom and ("bottom", masked) in recurring
            )
            if not drop:
                kept.append(line)
        new_pages.append(PageText(page.page_index, tuple(kept)))

    return SourceDocument(
        doc_id=doc.doc_id, filename=doc.filename, mime=doc.mime, pages=tuple(new_pages)
    )
