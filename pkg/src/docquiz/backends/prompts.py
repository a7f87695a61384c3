"""Prompt conventions shared by the pipeline and every generative adapter.

Answer-aware prompts highlight the seed span inside its passage; adapters
(mock or model-backed) recover the answer and the clean context from the
markers. Answer-agnostic prompts carry the passage only.
"""

from __future__ import annotations

ANSWER_AWARE_PREFIX = "generate question: "
ANSWER_AGNOSTIC_PREFIX = "generate questions: "
HIGHLIGHT = "<hl>"


def build_answer_aware_prompt(passage_text: str, start_char: int, end_char: int) -> str:
    pre, span, post = (
        passage_text[:start_char],
        passage_text[start_char:end_char],
        passage_text[end_char:],
    )
    return f"{ANSWER_AWARE_PREFIX}{pre}{HIGHLIGHT} {span} {HIGHLIGHT}{post}"


def build_answer_agnostic_prompt(passage_text: str) -> str:
    return f"{ANSWER_AGNOSTIC_PREFIX}{passage_text}"


def parse_answer_aware_prompt(prompt: str) -> tuple[str, int, int] | None:
    """Recover (context, answer_start, answer_end) or None if not tagged."""
    if not prompt.startswith(ANSWER_AWARE_PREFIX):
        return None
    body = prompt[len(ANSWER_AWARE_PREFIX):]
    first = body.find(HIGHLIGHT)
    if first < 0:
        return None
    second = body.find(HIGHLIGHT, first + len(HIGHLIGHT))
    if second < 0:
        return None
    pre = body[:first]
    span = body[first + len(HIGHLIGHT):second]
    post = body[second + len(HIGHLIGHT):]
    span = span[1:] if span.startswith(" ") else span
    span = span[:-1] if span.endswith(" ") else span
    context = pre + span + post
    return context, len(pre), len(pre) + len(span)
