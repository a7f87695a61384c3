from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from docquiz.backends import default_mock_registry
from docquiz.ingest import extract_text, segment, strip_boilerplate
from docquiz.ingest.types import PageText, SourceDocument

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixture_bytes() -> bytes:
    return (FIXTURES / "procedure.txt").read_bytes()


@pytest.fixture(scope="session")
def fixture_document(fixture_bytes):
    doc = extract_text(fixture_bytes, "plain_text", filename="procedure.txt")
    return strip_boilerplate(doc)


@pytest.fixture()
def fixture_structure(fixture_document):
    # segment() output is mutated downstream (passage id fill), so rebuild per test.
    return segment(fixture_document)


@pytest.fixture(scope="session")
def mock_backends():
    return default_mock_registry().pipeline_backends()


def make_document(pages: list[list[str]], doc_id: str = "d" * 64,
                  filename: str = "synthetic.txt", mime: str = "plain_text") -> SourceDocument:
    return SourceDocument(
        doc_id=doc_id,
        filename=filename,
        mime=mime,
        pages=tuple(PageText(i, tuple(lines)) for i, lines in enumerate(pages)),
    )


_WORDS = (
    "procedure record anomaly review board plan product service control "
    "baseline item report configuration waiver audit schedule output team "
    "manager supplier training quality archive closure meeting minutes"
).split()


def random_sentence(rng: random.Random, uid: int, n_words: int | None = None) -> str:
    n = n_words or rng.randint(4, 12)
    words = [rng.choice(_WORDS) for _ in range(n - 1)]
    body = " ".join(words + [f"tok{uid}"])
    return body[0].upper() + body[1:] + "."


def build_random_document(rng: random.Random) -> SourceDocument:
    """Synthetic numbered document; every sentence is on its own line and
    carries a globally unique token, so line coverage is exactly checkable."""
    lines: list[str] = []
    uid = 0
    top = rng.randint(1, 4)
    if rng.random() < 0.3:
        lines.append(random_sentence(rng, uid := uid + 1))
        lines.append("")
    for major in range(1, top + 1):
        lines.append(f"{major} Section {major} title")
        for _ in range(rng.randint(1, 2)):
            for _ in range(rng.randint(1, 3)):
                big = rng.random() < 0.08
                lines.append(random_sentence(rng, uid := uid + 1, 60 if big else None))
            lines.append("")
        for minor in range(1, rng.randint(0, 3) + 1):
            lines.append(f"{major}.{minor} Subsection {major}.{minor}")
            for _ in range(rng.randint(1, 3)):
                lines.append(random_sentence(rng, uid := uid + 1))
            lines.append("")
    n_pages = rng.randint(1, 3)
    if n_pages == 1:
        pages = [lines]
    else:
        per = max(1, len(lines) // n_pages)
        pages = [lines[i * per:(i + 1) * per] for i in range(n_pages - 1)]
        pages.append(lines[(n_pages - 1) * per:])
        pages = [p for p in pages if p]
    return make_document(pages, doc_id=f"{rng.getrandbits(128):032x}".ljust(64, "0"))


def table2_records() -> list[dict]:
    """Annotation fixture consistent with a 50-question expert evaluation:
    33 valid questions, 30 correct answers, 27 correct among the valid."""
    rows = []
    for i in range(1, 51):
        valid = i <= 33
        if valid:
            correct = i <= 27          # 27 valid & correct
        else:
            correct = i <= 36          # 3 invalid & correct (34..36)
        rows.append(
            {
                "candidate_id": f"c{i:04d}",
                "question_valid": valid,
                "answer_correct": correct,
                "annotator": "expert",
            }
        )
    return rows


def write_table2_fixture(path: Path) -> Path:
    path.write_text(json.dumps(table2_records(), indent=2), encoding="utf-8")
    return path


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    outcome = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    print(f"\n[acceptance] {name}: {outcome}", flush=True)
