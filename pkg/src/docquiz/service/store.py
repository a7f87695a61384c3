"""Embedded file-backed record store with atomic, versioned writes.

Records live as one JSON file per (kind, key) under the storage root. Writes
go to a temp file and are published with an atomic rename, so a reader (or a
process restarted mid-write) never observes a partial record. Sessions are
the only mutable kind; their writes use optimistic version checks.
"""

from __future__ import annotations

import json
import os
import re
import threading
import uuid
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

from ..errors import NotFound, VersionConflict

KIND_DOCUMENT = "document"
KIND_STRUCTURE = "structure"
KIND_CANDIDATES = "candidates"
KIND_VERIFIED = "verified"
KIND_SESSION = "session"
KIND_QUIZ = "quiz"
KINDS = (KIND_DOCUMENT, KIND_STRUCTURE, KIND_CANDIDATES, KIND_VERIFIED, KIND_SESSION, KIND_QUIZ)

_KEY_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]*$")


@dataclass(frozen=True)
class StoreRecord:
    key: str
    kind: str
    payload: bytes
    version: int


class FileStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        for kind in KINDS:
            (self.root / kind).mkdir(parents=True, exist_ok=True)
        self._locks: dict[tuple[str, str], threading.Lock] = defaultdict(threading.Lock)
        self._locks_guard = threading.Lock()

    def _lock(self, kind: str, key: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks[(kind, key)]

    def _path(self, kind: str, key: str) -> Path:
        if kind not in KINDS:
            raise ValueError(f"unknown record kind {kind!r}")
        if not _KEY_RE.match(key):
            raise ValueError(f"invalid record key {key!r}")
        return self.root / kind / f"{key}.json"

    def put(
        self,
        kind: str,
        key: str,
        payload: bytes,
        expected_version: int | None = None,
    ) -> StoreRecord:
        """Write a record; returns the stored record.

        Immutable kinds (everything but sessions) are idempotent under
        identical payloads and refuse differing re-writes. Session updates
        must pass the version they read; a stale version conflicts.
        """
        path = self._path(kind, key)
        with self._lock(kind, key):
            current = self._read(path)
            if kind == KIND_SESSION:
                base = current.version if current else 0
                if (expected_version or 0) != base:
                    raise VersionConflict(
                        f"session {key}: expected version {expected_version}, have {base}"
                    )
                record = StoreRecord(key=key, kind=kind, payload=payload, version=base + 1)
            else:
                if current is not None:
                    if current.payload != payload:
                        raise VersionConflict(
                            f"{kind} {key} already stored with different content"
                        )
                    return current
                record = StoreRecord(key=key, kind=kind, payload=payload, version=1)
            self._write_atomic(path, record)
            return record

    def get(self, kind: str, key: str) -> StoreRecord:
        record = self._read(self._path(kind, key))
        if record is None:
            raise NotFound(f"no {kind} record {key}")
        return record

    def exists(self, kind: str, key: str) -> bool:
        return self._path(kind, key).exists()

    def list_keys(self, kind: str) -> list[str]:
        directory = self.root / kind
        return sorted(
            p.stem for p in directory.glob("*.json") if not p.name.startswith(".")
        )

    def _read(self, path: Path) -> StoreRecord | None:
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            return None
        return StoreRecord(
            key=data["key"],
            kind=data["kind"],
            payload=data["payload"].encode("utf-8"),
            version=data["version"],
        )

    def _write_atomic(self, path: Path, record: StoreRecord) -> None:
        doc = {
            "key": record.key,
            "kind": record.kind,
            "version": record.version,
            "payload": record.payload.decode("utf-8"),
        }
        tmp = path.parent / f".tmp-{uuid.uuid4().hex}"
        tmp.write_text(json.dumps(doc, ensure_ascii=False), encoding="utf-8")
        os.replace(tmp, path)
