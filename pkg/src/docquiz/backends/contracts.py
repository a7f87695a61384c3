"""Model-backend contracts: generative seq2seq, extractive QA, embeddings.

The pipeline never names a concrete model; it talks to capability handles
resolved from a registry. Three invocation helpers (:func:`generate`,
:func:`answer`, :func:`embed`) enforce the shared parts of the contract --
input budgets, result invariants -- so adapters stay small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Protocol, runtime_checkable

from ..errors import BackendError, InputTooLong
from ..textutil import approx_token_count

KIND_GENERATIVE = "generative"
KIND_QA = "qa"
KIND_EMBEDDING = "embedding"


@dataclass(frozen=True)
class GenerationRequest:
    input_text: str
    num_beams: int = 5
    num_return_sequences: int = 1
    max_output_tokens: int = 64

    def __post_init__(self) -> None:
        if not self.input_text:
            raise ValueError("input_text must be non-empty")
        if self.num_beams < 1:
            raise ValueError("num_beams must be >= 1")
        if not 1 <= self.num_return_sequences <= self.num_beams:
            raise ValueError("num_return_sequences must be in [1, num_beams]")
        if self.max_output_tokens < 1:
            raise ValueError("max_output_tokens must be > 0")


@dataclass(frozen=True)
class GeneratedSequence:
    text: str
    score: float  # sequence log-probability; mocks use -0.1 * beam_rank
    beam_rank: int


@dataclass(frozen=True)
class AnswerSpan:
    start_char: int
    end_char: int
    text: str


@dataclass(frozen=True)
class QAResult:
    kind: str  # "span" | "no_answer"
    span: AnswerSpan | None
    span_score: float
    no_answer_score: float


@dataclass(frozen=True)
class EmbeddingVector:
    dim: int
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.dim != len(self.values):
            raise ValueError("dim does not match values length")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError("embedding values must be finite")


@runtime_checkable
class GenerativeBackend(Protocol):
    backend_id: str
    context_budget_tokens: int
    max_concurrent_calls: int

    def run_generate(self, request: GenerationRequest) -> list[GeneratedSequence]: ...


@runtime_checkable
class QABackend(Protocol):
    backend_id: str
    context_budget_tokens: int
    max_concurrent_calls: int

    def run_answer(self, question: str, context: str) -> QAResult: ...


@runtime_checkable
class EmbeddingBackend(Protocol):
    backend_id: str
    max_concurrent_calls: int

    def run_embed(self, text: str) -> EmbeddingVector: ...


def generate(backend: GenerativeBackend, request: GenerationRequest) -> list[GeneratedSequence]:
    """Run beam-search generation; deterministic per (backend, request)."""
    _check_budget(backend, request.input_text)
    sequences = backend.run_generate(request)
    if len(sequences) > request.num_return_sequences:
        raise BackendError(
            f"{backend.backend_id} returned {len(sequences)} sequences "
            f"(> {request.num_return_sequences} requested)"
        )
    ranks = [s.beam_rank for s in sequences]
    if ranks != sorted(set(ranks)):
        raise BackendError(f"{backend.backend_id} returned non-increasing beam ranks")
    scores = [s.score for s in sequences]
    if any(a < b for a, b in zip(scores, scores[1:])):
        raise BackendError(f"{backend.backend_id} scores increase with beam rank")
    return sequences


def answer(backend: QABackend, question: str, context: str) -> QAResult:
    """Extractive QA over the context; validates the span invariants."""
    if not question or not context:
        raise ValueError("question and context must be non-empty")
    _check_budget(backend, question + " " + context)
    result = backend.run_answer(question, context)
    if result.kind == "span":
        span = result.span
        if span is None:
            raise BackendError(f"{backend.backend_id} span result without a span")
        if not (0 <= span.start_char < span.end_char <= len(context)):
            raise BackendError(f"{backend.backend_id} span offsets out of range")
        if context[span.start_char:span.end_char] != span.text:
            raise BackendError(f"{backend.backend_id} span text mismatch")
    elif result.kind == "no_answer":
        if result.span is not None:
            raise BackendError(f"{backend.backend_id} no_answer result carries a span")
    else:
        raise BackendError(f"{backend.backend_id} unknown result kind {result.kind!r}")
    return result


def embed(backend: EmbeddingBackend, text: str) -> EmbeddingVector:
    """Fixed-dimension deterministic embedding of the text."""
    if not text:
        raise ValueError("text must be non-empty")
    vector = backend.run_embed(text)
    if not any(v != 0.0 for v in vector.values):
        raise BackendError(f"{backend.backend_id} produced a zero vector")
    return vector


def _check_budget(backend, text: str) -> None:
    budget = getattr(backend, "context_budget_tokens", 0)
    if budget and approx_token_count(text) > budget:
        raise InputTooLong(
            f"input of {approx_token_count(text)} tokens exceeds "
            f"{backend.backend_id} budget of {budget}"
        )
