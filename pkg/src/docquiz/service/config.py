"""Service configuration: file plus environment overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

ENV_PORT = "DOCQUIZ_PORT"
ENV_STORAGE = "DOCQUIZ_STORAGE_DIR"
ENV_REGISTRY = "DOCQUIZ_REGISTRY"


@dataclass
class ServiceConfig:
    port: int = 8000
    token: str | None = None
    storage_dir: str = ".docquiz-data"
    backend_registry: str | None = None  # path; None -> built-in mocks
    pipeline_defaults: dict = field(default_factory=dict)
    ui_dir: str | None = None  # static bundle to serve at /ui; None -> auto-detect

    @classmethod
    def load(cls, path: str | Path | None = None) -> "ServiceConfig":
        config = cls()
        if path is not None:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
            config = cls(
                port=data.get("port", config.port),
                token=data.get("token"),
                storage_dir=data.get("storage_dir", config.storage_dir),
                backend_registry=data.get("backend_registry"),
                pipeline_defaults=data.get("pipeline_defaults", {}),
                ui_dir=data.get("ui_dir"),
            )
        if os.environ.get(ENV_PORT):
            config.port = int(os.environ[ENV_PORT])
        if os.environ.get(ENV_STORAGE):
            config.storage_dir = os.environ[ENV_STORAGE]
        if os.environ.get(ENV_REGISTRY):
            config.backend_registry = os.environ[ENV_REGISTRY]
        return config
