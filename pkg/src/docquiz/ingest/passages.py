"""Passage enumeration under a token budget, and parenthetical stripping."""

from __future__ import annotations

from dataclasses import replace

from ..textutil import approx_token_count, sentence_spans
from .types import DocumentStructure, DroppedSentence, Passage, SourceDocument

#: Parenthesized spans beginning with one of these markers are treated as
#: inline examples and removed when preprocessing is enabled.
EXAMPLE_MARKERS = ("e.g.", "i.e.", "for example", "such as")


def enumerate_passages(
    structure: DocumentStructure,
    doc: SourceDocument | None,
    max_passage_tokens: int,
) -> tuple[list[Passage], list[DroppedSentence]]:
    """Turn paragraph blocks into budget-sized passages.

    Each paragraph becomes one passage; over-budget paragraphs are split at
    sentence boundaries by greedy packing. A single sentence beyond the
    budget cannot be placed anywhere: it is dropped and recorded. Fills each
    section's ``passages`` id list in place. The source document is optional
    (paragraph text lives on the structure) but must match when given.
    """
    if max_passage_tokens < 32:
        raise ValueError("max_passage_tokens must be >= 32")
    if doc is not None and doc.doc_id != structure.doc_id:
        raise ValueError("document does not match structure")

    passages: list[Passage] = []
    dropped: list[DroppedSentence] = []

    for section in structure.sections:
        section.passages = []
        for para_idx, para in enumerate(section.paragraphs):
            chunk_idx = 0
            for chunk in _pack_sentences(para.text, max_passage_tokens, dropped_sink=(
                lambda sent, tok: dropped.append(
                    DroppedSentence(
                        section_id=section.section_id,
                        source_span=(para.page_index, para.start_line, para.end_line),
                        sentence=sent,
                        approx_tokens=tok,
                    )
                )
            )):
                text = chunk.strip()
                if not text:
                    continue
                passage = Passage(
                    passage_id=f"{section.section_id}.p{para_idx:03d}.c{chunk_idx:02d}",
                    doc_id=structure.doc_id,
                    section_id=section.section_id,
                    text=text,
                    source_span=(para.page_index, para.start_line, para.end_line),
                    approx_tokens=approx_token_count(text),
                )
                section.passages.append(passage.passage_id)
                passages.append(passage)
                chunk_idx += 1

    return passages, dropped


def _pack_sentences(text, budget, dropped_sink):
    """Greedy sentence packing; yields chunk strings within the budget."""
    if approx_token_count(text) <= budget:
        yield text
        return
    spans = sentence_spans(text)
    group_start = None
    group_end = None
    group_tokens = 0
    for s, e in spans:
        tokens = approx_token_count(text[s:e])
        if tokens > budget:
            if group_start is not None:
                yield text[group_start:group_end]
                group_start = None
                group_tokens = 0
            dropped_sink(text[s:e], tokens)
            continue
        if group_start is None:
            group_start, group_end, group_tokens = s, e, tokens
        elif group_tokens + tokens <= budget:
            group_end = e
            group_tokens += tokens
        else:
            yield text[group_start:group_end]
            group_start, group_end, group_tokens = s, e, tokens
    if group_start is not None:
        yield text[group_start:group_end]


def strip_parentheticals(text: str) -> str:
    """Remove parenthesized inline examples, keeping other parentheticals.

    A span is removed when its content (after optional whitespace) begins
    with an example marker; removal also eats the whitespace immediately
    before the opening parenthesis. The scan is balance-aware and recurses
    into retained parentheticals; text with unbalanced parentheses is
    returned unchanged. Applied to a fixpoint so the operation is idempotent
    even when a removal exposes a new leading marker.
    """
    if not _balanced(text):
        return text
    current = text
    for _ in range(len(text) + 1):
        stripped = _strip_once(current)
        if stripped == current:
            return current
        current = stripped
    return current


def strip_passage(passage: Passage) -> Passage:
    """Passage with inline examples removed and the token count refreshed."""
    new_text = strip_parentheticals(passage.text).strip()
    return replace(
        passage,
        text=new_text,
        approx_tokens=approx_token_count(new_text),
        preprocessed=True,
    )


def _balanced(text: str) -> bool:
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
    return depth == 0


def _starts_with_marker(inner: str) -> bool:
    lowered = inner.lstrip().lower()
    return lowered.startswith(EXAMPLE_MARKERS)


def _matching_paren(text: str, open_idx: int) -> int:
    depth = 0
    for i in range(open_idx, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise ValueError("unbalanced text reached _matching_paren")


def _strip_once(text: str) -> str:
    result: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "(":
            j = _matching_paren(text, i)
            inner = text[i + 1:j]
            if _starts_with_marker(inner):
                while result and result[-1].isspace():
                    result.pop()
            else:
                result.append("(")
                result.extend(_strip_once(inner))
                result.append(")")
            i = j + 1
        else:
            result.append(ch)
            i += 1
    return "".join(result)
