"""Deterministic mock backends used by the test suite and offline runs.

All three mocks are pure functions of their inputs. Their rules are
normative and versioned: golden tests pin exact outputs, so any rule change
must bump ``MOCK_VERSION``.

Generative rule: answer-aware prompts yield one template question
"Who/What/When {phrase}?" where the phrase is the rest of the answer's
sentence and the interrogative follows the answer's head-token class
(person-role noun -> Who, year/month -> When, else What). Answer-agnostic
prompts yield one "What {verb phrase}?" per declarative sentence, at most
``num_return_sequences`` of them, with synthetic scores -0.1 * beam_rank.

QA rule: content words are the question's tokens minus the stopword list.
If none occurs in the context the result is no_answer (no_answer_score 1.0).
Otherwise the answer is the token run following the first content-word
match, to the end of that sentence, capped at 12 tokens (span_score 1.0).

Embedding rule: tokenize on non-alphanumerics, lowercase, hash each token
into 64 buckets (CRC-32), count, L2-normalize.
"""

from __future__ import annotations

import re
import zlib

import numpy as np

from ..lexicon import AUX_VERBS, MONTHS, ROLE_NOUNS, STOPWORDS
from ..textutil import sentence_spans, span_tokens, word_tokens
from .contracts import (
    AnswerSpan,
    EmbeddingVector,
    GeneratedSequence,
    GenerationRequest,
    QAResult,
)
from .prompts import ANSWER_AGNOSTIC_PREFIX, parse_answer_aware_prompt

MOCK_VERSION = "1"

EMBEDDING_DIM = 64
MAX_ANSWER_TOKENS = 12

_YEAR_RE = re.compile(r"(1[0-9]|20)\d{2}")


class MockGenerativeBackend:
    kind = "generative"
    version = MOCK_VERSION

    def __init__(self, backend_id: str = "mock-gen", context_budget_tokens: int = 512,
                 max_concurrent_calls: int = 8):
        self.backend_id = backend_id
        self.context_budget_tokens = context_budget_tokens
        self.max_concurrent_calls = max_concurrent_calls

    def run_generate(self, request: GenerationRequest) -> list[GeneratedSequence]:
        parsed = parse_answer_aware_prompt(request.input_text)
        if parsed is not None:
            questions = _answer_aware_questions(*parsed)
        else:
            body = request.input_text
            if body.startswith(ANSWER_AGNOSTIC_PREFIX):
                body = body[len(ANSWER_AGNOSTIC_PREFIX):]
            questions = _answer_agnostic_questions(body)
        questions = questions[:request.num_return_sequences]
        return [
            GeneratedSequence(text=q, score=-0.1 * rank if rank else 0.0, beam_rank=rank)
            for rank, q in enumerate(questions)
        ]


class MockQABackend:
    kind = "qa"
    version = MOCK_VERSION

    def __init__(self, backend_id: str = "mock-qa", context_budget_tokens: int = 512,
                 max_concurrent_calls: int = 8):
        self.backend_id = backend_id
        self.context_budget_tokens = context_budget_tokens
        self.max_concurrent_calls = max_concurrent_calls

    def run_answer(self, question: str, context: str) -> QAResult:
        content = {t for t in word_tokens(question) if t not in STOPWORDS}
        no_answer = QAResult(kind="no_answer", span=None, span_score=0.0, no_answer_score=1.0)
        if not content:
            return no_answer
        tokens = span_tokens(context)
        match_idx = None
        for idx, tok in enumerate(tokens):
            parts = word_tokens(tok.text)
            if parts and parts[0] in content:
                match_idx = idx
                break
        if match_idx is None:
            return no_answer
        sent = _containing_sentence(context, tokens[match_idx].start)
        run = [
            tok for tok in tokens[match_idx + 1:]
            if tok.start >= sent[0] and tok.end <= sent[1]
        ][:MAX_ANSWER_TOKENS]
        if not run:
            return no_answer  # matched word ends its sentence: nothing to extract
        start, end = run[0].start, run[-1].end
        return QAResult(
            kind="span",
            span=AnswerSpan(start_char=start, end_char=end, text=context[start:end]),
            span_score=1.0,
            no_answer_score=0.0,
        )


class MockEmbeddingBackend:
    kind = "embedding"
    version = MOCK_VERSION

    def __init__(self, backend_id: str = "mock-embed", max_concurrent_calls: int = 8):
        self.backend_id = backend_id
        self.max_concurrent_calls = max_concurrent_calls
        self.dim = EMBEDDING_DIM

    def run_embed(self, text: str) -> EmbeddingVector:
        counts = np.zeros(EMBEDDING_DIM)
        tokens = re.findall(r"[a-z0-9]+", text.lower())
        for tok in tokens:
            counts[zlib.crc32(tok.encode("utf-8")) % EMBEDDING_DIM] += 1.0
        if not tokens:
            counts[0] = 1.0  # degenerate all-punctuation input: fixed unit vector
        values = counts / np.linalg.norm(counts)
        return EmbeddingVector(dim=EMBEDDING_DIM, values=tuple(float(v) for v in values))


def token_bucket(token: str) -> int:
    """Bucket index the mock embedding assigns to a token (for fixtures)."""
    return zlib.crc32(token.encode("utf-8")) % EMBEDDING_DIM


def _containing_sentence(text: str, pos: int) -> tuple[int, int]:
    for s, e in sentence_spans(text):
        if s <= pos < e:
            return s, e
    return 0, len(text)


def _head_token_class(answer: str) -> str:
    words = word_tokens(answer)
    if not words:
        return "What"
    head = words[-1]
    if head in ROLE_NOUNS:
        return "Who"
    if head in MONTHS or _YEAR_RE.fullmatch(head):
        return "When"
    return "What"


def _clean_phrase(text: str) -> str:
    return " ".join(text.split()).strip(" .,:;")


def _answer_aware_questions(context: str, start: int, end: int) -> list[str]:
    sent = _containing_sentence(context, start)
    after = context[end:sent[1]]
    before = context[sent[0]:start]
    phrase = _clean_phrase(after) or _clean_phrase(before) or _clean_phrase(context[start:end])
    if not phrase:
        return []
    return [f"{_head_token_class(context[start:end])} {phrase}?"]


def _answer_agnostic_questions(context: str) -> list[str]:
    questions = []
    for s, e in sentence_spans(context):
        sentence = context[s:e]
        if not sentence.rstrip().endswith("."):
            continue
        tokens = [t.text for t in span_tokens(sentence)]
        vp_start = _verb_phrase_start(tokens)
        if vp_start is None:
            continue
        phrase = _clean_phrase(" ".join(tokens[vp_start:]))
        if phrase:
            questions.append(f"What {phrase}?")
    return questions


def _verb_phrase_start(tokens: list[str]) -> int | None:
    """First index (>= 1) that looks like the start of the verb phrase."""
    for i in range(1, len(tokens)):
        lowered = tokens[i].lower()
        if lowered in AUX_VERBS:
            return i
        if lowered in STOPWORDS:
            continue
        if len(lowered) > 3 and lowered.endswith(("ed", "ing", "s")):
            return i
    return None
