"""Generation run configuration."""

from __future__ import annotations

from dataclasses import dataclass, field

STRATEGY_ANSWER_AWARE = "answer_aware"
STRATEGY_ANSWER_AGNOSTIC = "answer_agnostic"
ALL_STRATEGIES = (STRATEGY_ANSWER_AWARE, STRATEGY_ANSWER_AGNOSTIC)


@dataclass(frozen=True)
class GeneratorConfig:
    num_beams: int = 5
    questions_per_passage_cap: int = 10
    dedup_threshold: float = 0.8
    strategies: tuple[str, ...] = ALL_STRATEGIES
    strip_parentheticals: bool = False
    roundtrip_f1_threshold: float = 0.5
    max_output_tokens: int = 64
    seed_answers_per_passage: int = 5

    def __post_init__(self) -> None:
        if self.num_beams < 1:
            raise ValueError("num_beams must be >= 1")
        if not 0.0 < self.dedup_threshold <= 1.0:
            raise ValueError("dedup_threshold must be in (0, 1]")
        if not 0.0 <= self.roundtrip_f1_threshold <= 1.0:
            raise ValueError("roundtrip_f1_threshold must be in [0, 1]")
        if not self.strategies:
            raise ValueError("at least one strategy is required")
        for strategy in self.strategies:
            if strategy not in ALL_STRATEGIES:
                raise ValueError(f"unknown strategy {strategy!r}")
        if self.questions_per_passage_cap < 1:
            raise ValueError("questions_per_passage_cap must be >= 1")

    def to_dict(self) -> dict:
        return {
            "num_beams": self.num_beams,
            "questions_per_passage_cap": self.questions_per_passage_cap,
            "dedup_threshold": self.dedup_threshold,
            "strategies": list(self.strategies),
            "strip_parentheticals": self.strip_parentheticals,
            "roundtrip_f1_threshold": self.roundtrip_f1_threshold,
            "max_output_tokens": self.max_output_tokens,
            "seed_answers_per_passage": self.seed_answers_per_passage,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GeneratorConfig":
        kwargs = dict(data)
        if "strategies" in kwargs:
            kwargs["strategies"] = tuple(kwargs["strategies"])
        return cls(**kwargs)
