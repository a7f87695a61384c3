"""Expert evaluation loop: export an annotation sheet, fill it in, compute
the accuracy report (overall and conditional on question validity).

Run with: python demos/04_evaluate_annotations.py
"""

import json
import tempfile

from docquiz.evaluation import compute_metrics, load_annotation_sheet
from docquiz.qgen import GeneratorConfig
from docquiz.service.store import FileStore
from docquiz.service.workflow import QuizWorkflow

SAMPLE = """\
1 Responsibilities
The Review Board examines anomaly reports weekly. The quality manager
approves the configuration management plan. The secretariat records the
minutes after every meeting.
"""

with tempfile.TemporaryDirectory() as tmp:
    workflow = QuizWorkflow(FileStore(tmp))
    ingested = workflow.ingest_bytes(SAMPLE.encode(), "sample.txt")
    session = workflow.create_session(ingested.doc_id, GeneratorConfig())
    workflow.choose_sections_by_number(session.session_id, ["1"])
    workflow.run_generation(session.session_id)

    sheet = workflow.annotation_sheet(session.session_id)
    print(f"annotation sheet with {len(sheet)} rows; each row carries the")
    print("question, extracted answer, and source passage for the expert:\n")
    print(json.dumps(sheet[0], indent=2)[:400], "…\n")

    # Simulate the expert: alternate judgments deterministically.
    for i, row in enumerate(sheet):
        row["question_valid"] = i % 3 != 2
        row["answer_correct"] = i % 2 == 0

    records = load_annotation_sheet(json.dumps(sheet))
    report = compute_metrics(records)
    print("evaluation report:")
    print(json.dumps(report.to_dict(), indent=2))
    print("\nThe starred metric conditions on valid questions only; when no")
    print("question is valid it is reported as absent rather than zero.")
