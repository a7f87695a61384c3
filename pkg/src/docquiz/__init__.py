"""docquiz: procedure documents in, curated training quizzes out.

The pipeline segments a document into passages, generates candidate
questions with answer-aware and answer-agnostic strategies, verifies each
question by extracting its answer from the source passage, and hands the
survivors to a human trainer who assembles and exports the final quiz.
"""

from . import backends, evaluation, ingest, qgen, quiz, verify
from .errors import DocquizError

__version__ = "0.1.0"

__all__ = [
    "DocquizError",
    "backends",
    "evaluation",
    "ingest",
    "qgen",
    "quiz",
    "verify",
    "__version__",
]
