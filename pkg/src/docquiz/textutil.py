"""Deterministic text primitives: tokenization, sentence spans, normalization.

No learned components anywhere in this module; every split is a fixed regex
rule so pipeline output is reproducible byte for byte.
"""

from __future__ import annotations

import re
from typing import NamedTuple

_WORD_RE = re.compile(r"[A-Za-z0-9][A-Za-z0-9'&./-]*")
_ALNUM_RE = re.compile(r"[a-z0-9]+")

# Tokens that end with a sentence terminator but do not end a sentence.
_ABBREVIATIONS = frozenset({
    "e.g", "i.e", "etc", "vs", "cf", "fig", "no", "ref", "sec", "para",
    "mr", "mrs", "ms", "dr", "inc", "ltd",
})

_SENT_BOUNDARY_RE = re.compile(r"[.!?]+[\"')\]]*\s+")


class Token(NamedTuple):
    text: str
    start: int
    end: int


def span_tokens(text: str) -> list[Token]:
    """Word-ish tokens with character offsets into the original string.

    Internal dots survive ("2.0", "e.g"), trailing sentence dots do not.
    """
    tokens = []
    for m in _WORD_RE.finditer(text):
        tok, start, end = m.group(), m.start(), m.end()
        while tok.endswith(".") and len(tok) > 1:
            tok = tok[:-1]
            end -= 1
        tokens.append(Token(tok, start, end))
    return tokens


def word_tokens(text: str) -> list[str]:
    """Lowercased alphanumeric tokens; punctuation is discarded."""
    return _ALNUM_RE.findall(text.lower())


def sentence_spans(text: str) -> list[tuple[int, int]]:
    """(start, end) spans of sentences, covering all non-space text.

    Splits after ``. ! ?`` runs followed by whitespace, except after a known
    abbreviation. A text without terminators is a single sentence.
    """
    spans: list[tuple[int, int]] = []
    start = 0
    for m in _SENT_BOUNDARY_RE.finditer(text):
        candidate_end = m.end()
        prior = text[start:m.start()]
        last_word = prior.rsplit(None, 1)[-1].lower() if prior.split() else ""
        last_word = last_word.strip("(\"'")
        if last_word.rstrip(".") in _ABBREVIATIONS:
            continue
        # Do not split after a single initial like "J." either.
        if re.fullmatch(r"[a-z]", last_word.rstrip(".")):
            continue
        spans.append((start, candidate_end))
        start = candidate_end
    if start < len(text) and text[start:].strip():
        spans.append((start, len(text)))
    # Trim spans to non-space extents so slices are tidy.
    trimmed = []
    for s, e in spans:
        seg = text[s:e]
        lead = len(seg) - len(seg.lstrip())
        trail = len(seg) - len(seg.rstrip())
        if seg.strip():
            trimmed.append((s + lead, e - trail))
    return trimmed


def sentences(text: str) -> list[str]:
    return [text[s:e] for s, e in sentence_spans(text)]


def normalize_ws(text: str) -> str:
    return " ".join(text.split())


def approx_token_count(text: str) -> int:
    """Whitespace-split token approximation used for length budgeting."""
    return len(text.split())
