"""HTTP service, background jobs, durable store, and workflow facade."""

from .app import create_app
from .config import ServiceConfig
from .jobs import Job, JobManager
from .store import FileStore, StoreRecord
from .workflow import QuizWorkflow

__all__ = [
    "FileStore",
    "Job",
    "JobManager",
    "QuizWorkflow",
    "ServiceConfig",
    "StoreRecord",
    "create_app",
]
