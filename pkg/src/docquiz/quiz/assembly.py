"""Quiz construction and the two-audience renderings.

The exported quiz has a trainee side (numbered questions, nothing else) and
a trainer side (question, answer, source passage, section reference per
item). Markdown is the canonical layout; JSON mirrors the quiz type; HTML is
a deterministic transform of the markdown.
"""

from __future__ import annotations

import hashlib
import html as html_lib
import json
from dataclasses import dataclass
from pathlib import PurePosixPath
from typing import Mapping

from ..errors import NothingSelected
from ..ingest.types import DocumentStructure, Passage
from ..qgen.candidates import CandidateQuestion
from ..verify import VerifiedCandidate
from .session import (
    STATE_CURATED,
    STATE_EXPORTED,
    CurationSession,
    _require_state,
)

AUDIENCE_TRAINEE = "trainee"
AUDIENCE_TRAINER = "trainer"
FORMATS = ("markdown", "json", "html")

CONTENT_TYPES = {
    "markdown": "text/markdown; charset=utf-8",
    "json": "application/json; charset=utf-8",
    "html": "text/html; charset=utf-8",
}


@dataclass(frozen=True)
class QuizItem:
    index: int  # 1-based
    question_text: str
    answer_text: str
    passage_excerpt: str
    section_number: str
    section_title: str


@dataclass(frozen=True)
class Quiz:
    quiz_id: str
    session_id: str
    title: str
    items: tuple[QuizItem, ...]

    def to_dict(self) -> dict:
        return {
            "quiz_id": self.quiz_id,
            "session_id": self.session_id,
            "title": self.title,
            "items": [
                {
                    "index": item.index,
                    "question_text": item.question_text,
                    "answer_text": item.answer_text,
                    "passage_excerpt": item.passage_excerpt,
                    "section_number": item.section_number,
                    "section_title": item.section_title,
                }
                for item in self.items
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Quiz":
        return cls(
            quiz_id=data["quiz_id"],
            session_id=data["session_id"],
            title=data["title"],
            items=tuple(
                QuizItem(
                    index=i["index"],
                    question_text=i["question_text"],
                    answer_text=i["answer_text"],
                    passage_excerpt=i["passage_excerpt"],
                    section_number=i["section_number"],
                    section_title=i["section_title"],
                )
                for i in data["items"]
            ),
        )


def quiz_title(filename: str) -> str:
    """Deterministic title derived from the source document name."""
    stem = PurePosixPath(filename or "document").name
    for suffix in (".pdf", ".md", ".markdown", ".txt", ".text"):
        if stem.lower().endswith(suffix):
            stem = stem[: -len(suffix)]
            break
    return f"Quiz: {stem or 'document'}"


def build_quiz(
    session: CurationSession,
    candidates: Mapping[str, CandidateQuestion],
    verified: Mapping[str, VerifiedCandidate],
    passages: Mapping[str, Passage],
    structure: DocumentStructure,
    title: str,
) -> Quiz:
    """Assemble quiz items in the trainer's selection order."""
    if not session.selections:
        raise NothingSelected("no questions selected")
    items = []
    for index, candidate_id in enumerate(session.selections, start=1):
        cand = candidates[candidate_id]
        answer = verified[candidate_id]
        passage = passages[cand.passage_id]
        section = structure.section_by_id(passage.section_id)
        items.append(
            QuizItem(
                index=index,
                question_text=cand.question_text,
                answer_text=answer.answer_text,
                passage_excerpt=passage.text,
                section_number=section.number,
                section_title=section.title,
            )
        )
    digest = hashlib.sha256(
        json.dumps(
            [title] + [[i.question_text, i.answer_text] for i in items],
            sort_keys=True,
            ensure_ascii=False,
        ).encode("utf-8")
    ).hexdigest()[:16]
    return Quiz(
        quiz_id=f"quiz-{digest}",
        session_id=session.session_id,
        title=title,
        items=tuple(items),
    )


def render_quiz(session: CurationSession, quiz: Quiz, audience: str) -> str:
    """Markdown rendering for one audience; first render exports the session.

    Trainee: numbered questions only. Trainer: the full canonical layout
    with the answer key and source passages.
    """
    _require_state(session, STATE_CURATED, STATE_EXPORTED)
    if not session.selections:
        raise NothingSelected("no questions selected")
    if audience not in (AUDIENCE_TRAINEE, AUDIENCE_TRAINER):
        raise ValueError(f"unknown audience {audience!r}")

    lines = [f"# {quiz.title}", "", "## Trainee section", ""]
    for item in quiz.items:
        lines.append(f"{item.index}. {item.question_text}")
    if audience == AUDIENCE_TRAINER:
        lines += ["", "## Trainer section", ""]
        for item in quiz.items:
            lines.append(f"**Q{item.index}.** {item.question_text}")
            lines.append(f"**A.** {item.answer_text}")
            lines.append(f"> {item.passage_excerpt}")
            lines.append(f"— §{item.section_number} {item.section_title}")
            lines.append("")
        while lines and lines[-1] == "":
            lines.pop()
    if session.state != STATE_EXPORTED:
        session.state = STATE_EXPORTED
        session.touch()
    return "\n".join(lines) + "\n"


def export_quiz(
    session: CurationSession, quiz: Quiz, audience: str, fmt: str
) -> tuple[bytes, str]:
    """Export bytes and a filename for the audience/format pair."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    markdown = render_quiz(session, quiz, audience)
    stem = f"{quiz.quiz_id}-{audience}"
    if fmt == "markdown":
        return markdown.encode("utf-8"), f"{stem}.md"
    if fmt == "json":
        payload = quiz.to_dict()
        if audience == AUDIENCE_TRAINEE:
            payload["items"] = [
                {"index": i["index"], "question_text": i["question_text"]}
                for i in payload["items"]
            ]
        data = json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2) + "\n"
        return data.encode("utf-8"), f"{stem}.json"
    return markdown_to_html(markdown, quiz.title).encode("utf-8"), f"{stem}.html"


def markdown_to_html(markdown: str, title: str) -> str:
    """Deterministic transform of the canonical markdown into XHTML."""
    body: list[str] = []
    in_list = False

    def close_list() -> None:
        nonlocal in_list
        if in_list:
            body.append("</ol>")
            in_list = False

    for line in markdown.splitlines():
        if not line.strip():
            close_list()
            continue
        esc = html_lib.escape(line, quote=False)
        if line.startswith("# "):
            close_list()
            body.append(f"<h1>{html_lib.escape(line[2:], quote=False)}</h1>")
        elif line.startswith("## "):
            close_list()
            body.append(f"<h2>{html_lib.escape(line[3:], quote=False)}</h2>")
        elif line.startswith("> "):
            close_list()
            body.append(f"<blockquote>{html_lib.escape(line[2:], quote=False)}</blockquote>")
        elif line.split(". ", 1)[0].isdigit():
            if not in_list:
                body.append("<ol>")
                in_list = True
            body.append(f"<li>{html_lib.escape(line.split('. ', 1)[1], quote=False)}</li>")
        elif line.startswith("**"):
            close_list()
            text = esc
            while "**" in text:
                text = text.replace("**", "<strong>", 1).replace("**", "</strong>", 1)
            body.append(f"<p>{text}</p>")
        else:
            close_list()
            body.append(f"<p>{esc}</p>")
    close_list()
    inner = "\n".join(body)
    return (
        "<!DOCTYPE html>\n"
        '<html xmlns="http://www.w3.org/1999/xhtml">\n'
        f"<head><meta charset=\"utf-8\" /><title>{html_lib.escape(title, quote=False)}</title></head>\n"
        f"<body>\n{inner}\n</body>\n</html>\n"
    )
