"""Question generation: strategies, round-trip scoring, dedup, orchestration."""

from .candidates import (
    STATUS_GENERATED,
    STATUS_REJECTED_DUPLICATE,
    STATUS_REJECTED_NO_ANSWER,
    STATUS_VERIFIED,
    CandidateQuestion,
    SeedAnswer,
    assign_candidate_ids,
    canonical_sort,
    from_jsonl,
    to_jsonl,
)
from .config import (
    ALL_STRATEGIES,
    STRATEGY_ANSWER_AGNOSTIC,
    STRATEGY_ANSWER_AWARE,
    GeneratorConfig,
)
from .dedup import dedup
from .generate import generate_answer_agnostic, generate_answer_aware, postprocess_question
from .pipeline import GenerationRun, generate_candidates
from .roundtrip import roundtrip_consistency, token_f1
from .seeds import extract_answer_candidates
from .similarity import cosine_similarity

__all__ = [
    "ALL_STRATEGIES",
    "STATUS_GENERATED",
    "STATUS_REJECTED_DUPLICATE",
    "STATUS_REJECTED_NO_ANSWER",
    "STATUS_VERIFIED",
    "STRATEGY_ANSWER_AGNOSTIC",
    "STRATEGY_ANSWER_AWARE",
    "CandidateQuestion",
    "GenerationRun",
    "GeneratorConfig",
    "SeedAnswer",
    "assign_candidate_ids",
    "canonical_sort",
    "cosine_similarity",
    "dedup",
    "extract_answer_candidates",
    "from_jsonl",
    "generate_answer_agnostic",
    "generate_answer_aware",
    "generate_candidates",
    "postprocess_question",
    "roundtrip_consistency",
    "to_jsonl",
    "token_f1",
]
