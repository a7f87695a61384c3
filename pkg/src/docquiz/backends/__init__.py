"""Backend contracts, deterministic mocks, and the configuration registry."""

from .contracts import (
    KIND_EMBEDDING,
    KIND_GENERATIVE,
    KIND_QA,
    AnswerSpan,
    EmbeddingBackend,
    EmbeddingVector,
    GeneratedSequence,
    GenerationRequest,
    GenerativeBackend,
    QABackend,
    QAResult,
    answer,
    embed,
    generate,
)
from .mock import (
    MOCK_VERSION,
    MockEmbeddingBackend,
    MockGenerativeBackend,
    MockQABackend,
    token_bucket,
)
from .prompts import (
    build_answer_agnostic_prompt,
    build_answer_aware_prompt,
    parse_answer_aware_prompt,
)
from .registry import BackendRegistry, BackendSpec, PipelineBackends, default_mock_registry

__all__ = [
    "KIND_EMBEDDING",
    "KIND_GENERATIVE",
    "KIND_QA",
    "MOCK_VERSION",
    "AnswerSpan",
    "BackendRegistry",
    "BackendSpec",
    "EmbeddingBackend",
    "EmbeddingVector",
    "GeneratedSequence",
    "GenerationRequest",
    "GenerativeBackend",
    "MockEmbeddingBackend",
    "MockGenerativeBackend",
    "MockQABackend",
    "PipelineBackends",
    "QABackend",
    "QAResult",
    "answer",
    "build_answer_agnostic_prompt",
    "build_answer_aware_prompt",
    "default_mock_registry",
    "embed",
    "generate",
    "parse_answer_aware_prompt",
    "token_bucket",
]
