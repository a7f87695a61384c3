"""Curation sessions and quiz assembly."""

from .assembly import (
    AUDIENCE_TRAINEE,
    AUDIENCE_TRAINER,
    CONTENT_TYPES,
    FORMATS,
    Quiz,
    QuizItem,
    build_quiz,
    export_quiz,
    markdown_to_html,
    quiz_title,
    render_quiz,
)
from .session import (
    STATE_CREATED,
    STATE_CURATED,
    STATE_EXPORTED,
    STATE_GENERATED,
    STATE_ORDER,
    STATE_SECTIONS_CHOSEN,
    CurationSession,
    GenerationOutcome,
    choose_sections,
    create_session,
    run_generation,
    select_questions,
)

__all__ = [
    "AUDIENCE_TRAINEE",
    "AUDIENCE_TRAINER",
    "CONTENT_TYPES",
    "FORMATS",
    "STATE_CREATED",
    "STATE_CURATED",
    "STATE_EXPORTED",
    "STATE_GENERATED",
    "STATE_ORDER",
    "STATE_SECTIONS_CHOSEN",
    "CurationSession",
    "GenerationOutcome",
    "Quiz",
    "QuizItem",
    "build_quiz",
    "choose_sections",
    "create_session",
    "export_quiz",
    "markdown_to_html",
    "quiz_title",
    "render_quiz",
    "run_generation",
    "select_questions",
]
