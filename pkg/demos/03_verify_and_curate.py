"""The human-in-the-loop half: answer verification, a curation session,
question selection, and the two-audience quiz export.

Run with: python demos/03_verify_and_curate.py
"""

import tempfile

from docquiz.qgen import GeneratorConfig
from docquiz.service.store import FileStore
from docquiz.service.workflow import QuizWorkflow

SAMPLE = """\
1 Purpose
The quality manager approves the configuration management plan.

2 Responsibilities
The Review Board examines anomaly reports weekly. A supplier waiver can be
issued by the OPS Project Manager or Service Manager. Each item must be there.
"""

with tempfile.TemporaryDirectory() as tmp:
    workflow = QuizWorkflow(FileStore(tmp))

    ingested = workflow.ingest_bytes(SAMPLE.encode(), "sample.txt")
    print(f"ingested {ingested.doc_id[:16]}…  sections={ingested.n_sections} "
          f"passages={ingested.n_passages}")

    session = workflow.create_session(ingested.doc_id, GeneratorConfig())
    workflow.choose_sections_by_number(session.session_id, ["1", "2"])
    session = workflow.run_generation(session.session_id)
    print(f"\nsession {session.session_id[:8]}… state={session.state}")
    print(f"rejection report: {session.rejection_report}")

    verified = workflow.candidates(session.session_id, status="verified")
    print(f"\n{len(verified)} verified candidates:")
    for row in verified:
        print(f"  {row['candidate_id']}  {row['question_text']}")

    rejected = workflow.candidates(session.session_id, status="rejected_no_answer")
    for row in rejected:
        print(f"  (unanswerable, filtered out: {row['question_text']})")

    picks = [row["candidate_id"] for row in verified[:3]]
    workflow.select(session.session_id, picks)

    trainee, _, _ = workflow.export(session.session_id, "trainee", "markdown")
    trainer, _, _ = workflow.export(session.session_id, "trainer", "markdown")
    print("\n--- trainee handout (questions only) ---")
    print(trainee.decode())
    print("--- trainer copy (with answer key and passages) ---")
    print(trainer.decode())
