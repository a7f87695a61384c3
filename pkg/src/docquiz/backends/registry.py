"""Backend registry: configuration file -> capability handles.

The registry file is a JSON list of entries::

    {"backend_id": "...", "kind": "generative|qa|embedding",
     "adapter": "...", "parameters": {...},
     "max_concurrent_calls": 1, "context_budget_tokens": 512}

An entry's ``adapter`` selects the implementation; ``parameters`` are passed
through to it (model directories, strategy role, decoding defaults).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import BackendUnavailable
from .contracts import KIND_EMBEDDING, KIND_GENERATIVE, KIND_QA
from .mock import MockEmbeddingBackend, MockGenerativeBackend, MockQABackend


@dataclass(frozen=True)
class BackendSpec:
    backend_id: str
    kind: str
    adapter: str
    parameters: dict = field(default_factory=dict)
    max_concurrent_calls: int = 1
    context_budget_tokens: int = 512


@dataclass(frozen=True)
class PipelineBackends:
    """The resolved handles one generation run needs."""

    answer_aware: object
    answer_agnostic: object
    qa: object
    embedding: object


def _build(spec: BackendSpec):
    if spec.adapter == "mock":
        if spec.kind == KIND_GENERATIVE:
            return MockGenerativeBackend(
                spec.backend_id, spec.context_budget_tokens, spec.max_concurrent_calls
            )
        if spec.kind == KIND_QA:
            return MockQABackend(
                spec.backend_id, spec.context_budget_tokens, spec.max_concurrent_calls
            )
        if spec.kind == KIND_EMBEDDING:
            return MockEmbeddingBackend(spec.backend_id, spec.max_concurrent_calls)
        raise BackendUnavailable(f"unknown backend kind {spec.kind!r}")
    if spec.adapter == "transformers":
        from . import hf

        return hf.build(spec)
    raise BackendUnavailable(f"unknown adapter {spec.adapter!r}")


class BackendRegistry:
    def __init__(self, specs: list[BackendSpec]):
        self._specs = {spec.backend_id: spec for spec in specs}
        self._instances: dict[str, object] = {}

    @classmethod
    def from_file(cls, path: str | Path) -> "BackendRegistry":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        specs = [
            BackendSpec(
                backend_id=entry["backend_id"],
                kind=entry["kind"],
                adapter=entry["adapter"],
                parameters=entry.get("parameters", {}),
                max_concurrent_calls=entry.get("max_concurrent_calls", 1),
                context_budget_tokens=entry.get("context_budget_tokens", 512),
            )
            for entry in data
        ]
        return cls(specs)

    def resolve(self, backend_id: str):
        if backend_id not in self._specs:
            raise BackendUnavailable(f"no backend {backend_id!r} in registry")
        if backend_id not in self._instances:
            self._instances[backend_id] = _build(self._specs[backend_id])
        return self._instances[backend_id]

    def _first_of(self, kind: str, role: str | None = None):
        for spec in self._specs.values():
            if spec.kind != kind:
                continue
            if role is not None and spec.parameters.get("strategy") not in (None, role):
                continue
            return self.resolve(spec.backend_id)
        raise BackendUnavailable(f"registry has no {kind} backend" + (
            f" for strategy {role}" if role else ""
        ))

    def pipeline_backends(self) -> PipelineBackends:
        """Pick one handle per pipeline role.

        Generative entries may declare ``parameters.strategy`` to serve only
        one strategy; an entry without it serves both.
        """
        return PipelineBackends(
            answer_aware=self._first_of(KIND_GENERATIVE, "answer_aware"),
            answer_agnostic=self._first_of(KIND_GENERATIVE, "answer_agnostic"),
            qa=self._first_of(KIND_QA),
            embedding=self._first_of(KIND_EMBEDDING),
        )


def default_mock_registry() -> BackendRegistry:
    """All-mock registry used when no registry file is supplied."""
    return BackendRegistry([
        BackendSpec("mock-gen", KIND_GENERATIVE, "mock", max_concurrent_calls=8),
        BackendSpec("mock-qa", KIND_QA, "mock", max_concurrent_calls=8),
        BackendSpec("mock-embed", KIND_EMBEDDING, "mock", max_concurrent_calls=8),
    ])
