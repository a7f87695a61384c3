"""Seed-answer span extraction for answer-aware generation.

Multitask generation models usually fold this step into a learned head;
here it is an explicit, inspectable rule so it can be swapped for a learned
extractor adapter without touching the pipeline. The rule keeps noun-phrase
shaped runs: capitalized words, numbers, and role nouns, with a single
lowercase bridge word between eligible neighbors (so "The quality manager"
survives as one span). Runs are clipped to 1-6 tokens, trailing stopwords
trimmed, and a run that was only a sentence-initial stopword is discarded.
"""

from __future__ import annotations

from ..ingest.types import Passage
from ..lexicon import ROLE_NOUNS, STOPWORDS
from ..textutil import Token, sentence_spans, span_tokens

MAX_SPAN_TOKENS = 6
DEFAULT_MAX_CANDIDATES = 5


def extract_answer_candidates(
    passage: Passage,
    qa_backend: object | None = None,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> list[tuple[str, int, int]]:
    """Up to ``max_candidates`` non-overlapping seed spans in document order.

    ``qa_backend`` is accepted for interface compatibility with learned
    extractors; the rule-based implementation does not consult it.
    """
    if max_candidates < 1:
        raise ValueError("max_candidates must be >= 1")
    spans: list[tuple[str, int, int]] = []
    text = passage.text
    for sent_start, sent_end in sentence_spans(text):
        tokens = [t for t in span_tokens(text) if sent_start <= t.start and t.end <= sent_end]
        eligible = _eligibility(tokens)
        run: list[Token] = []
        for tok, ok in zip(tokens, eligible):
            if ok:
                run.append(tok)
            else:
                _flush(run, text, spans)
                run = []
        _flush(run, text, spans)
    return spans[:max_candidates]


def _eligibility(tokens: list[Token]) -> list[bool]:
    base = []
    for tok in tokens:
        lowered = tok.text.lower()
        base.append(
            tok.text[0].isupper()
            or any(ch.isdigit() for ch in tok.text)
            or lowered in ROLE_NOUNS
        )
    # Bridge a single lowercase non-stopword token between eligible neighbors.
    out = list(base)
    for i in range(1, len(tokens) - 1):
        if not base[i] and base[i - 1] and base[i + 1]:
            lowered = tokens[i].text.lower()
            if lowered not in STOPWORDS:
                out[i] = True
    return out


def _flush(run: list[Token], text: str, spans: list[tuple[str, int, int]]) -> None:
    if not run:
        return
    run = run[:MAX_SPAN_TOKENS]
    while run and run[-1].text.lower() in STOPWORDS:
        run.pop()
    if not run:
        return
    start, end = run[0].start, run[-1].end
    spans.append((text[start:end], start, end))
