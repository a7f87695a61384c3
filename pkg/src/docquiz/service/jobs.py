"""In-process background jobs with monotonic progress."""

from __future__ import annotations

import threading
import uuid
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from typing import Callable

JOB_QUEUED = "queued"
JOB_RUNNING = "running"
JOB_SUCCEEDED = "succeeded"
JOB_FAILED = "failed"

_TERMINAL = (JOB_SUCCEEDED, JOB_FAILED)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class Job:
    def __init__(self, kind: str):
        self.job_id = uuid.uuid4().hex
        self.kind = kind
        self.status = JOB_QUEUED
        self.done = 0
        self.total = 0
        self.result_ref: str | None = None
        self.error: str | None = None
        self.created_at = _now()
        self.updated_at = self.created_at
        self._lock = threading.Lock()

    # Progress hooks handed to pipeline code.
    def set_total(self, total: int) -> None:
        with self._lock:
            if self.status in _TERMINAL:
                return
            self.total = max(self.total, total)
            self.updated_at = _now()

    def advance(self, steps: int = 1) -> None:
        with self._lock:
            if self.status in _TERMINAL:
                return
            self.done = min(max(self.done + steps, self.done), self.total or self.done + steps)
            self.updated_at = _now()

    def to_dict(self) -> dict:
        with self._lock:
            return {
                "job_id": self.job_id,
                "kind": self.kind,
                "status": self.status,
                "progress": {"done": self.done, "total": self.total},
                "result_ref": self.result_ref,
                "error": self.error,
                "created_at": self.created_at,
                "updated_at": self.updated_at,
            }

    def _start(self) -> None:
        with self._lock:
            if self.status == JOB_QUEUED:
                self.status = JOB_RUNNING
                self.updated_at = _now()

    def _finish(self, result_ref: str | None) -> None:
        with self._lock:
            if self.status in _TERMINAL:
                return
            self.status = JOB_SUCCEEDED
            self.result_ref = result_ref
            self.done = max(self.done, self.total)
            self.updated_at = _now()

    def _fail(self, error: str) -> None:
        with self._lock:
            if self.status in _TERMINAL:
                return
            self.status = JOB_FAILED
            self.error = error
            self.updated_at = _now()


class JobManager:
    """Bounded worker pool; job records are in-memory by design (the durable
    artifacts are the store records a job produces)."""

    def __init__(self, max_workers: int = 2):
        self._executor = ThreadPoolExecutor(max_workers=max_workers)
        self._jobs: dict[str, Job] = {}
        self._lock = threading.Lock()

    def submit(self, kind: str, work: Callable[[Job], str | None]) -> Job:
        job = Job(kind)
        with self._lock:
            self._jobs[job.job_id] = job

        def runner() -> None:
            job._start()
            try:
                result_ref = work(job)
            except Exception as exc:  # job-level capture: surfaced via GET /jobs
                job._fail(str(exc))
            else:
                job._finish(result_ref)

        self._executor.submit(runner)
        return job

    def get(self, job_id: str) -> Job | None:
        with self._lock:
            return self._jobs.get(job_id)

    def shutdown(self) -> None:
        self._executor.shutdown(wait=True)
