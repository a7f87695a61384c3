"""Candidate question generation with the deterministic mock backends:
seed-span extraction, both strategies, round-trip scoring, and embedding
dedup over the merged list.

Run with: python demos/02_generate_candidates.py
"""

from docquiz.backends import default_mock_registry
from docquiz.ingest import enumerate_passages, extract_text, segment
from docquiz.qgen import GeneratorConfig, extract_answer_candidates, generate_candidates

SAMPLE = """\
1 Responsibilities
The Review Board examines anomaly reports weekly. A supplier waiver can be
issued by the OPS Project Manager or Service Manager.

2 Records
Root cause identification is mandatory for the closure of a problem report.
Each item must be there.
"""

doc = extract_text(SAMPLE.encode(), "plain_text", filename="sample.txt")
structure = segment(doc)
passages, _ = enumerate_passages(structure, doc, 480)

print("seed answer spans (rule-based, swappable for a learned extractor):")
for p in passages:
    for text, start, end in extract_answer_candidates(p):
        print(f"  {p.passage_id}  [{start}:{end}]  {text!r}")

backends = default_mock_registry().pipeline_backends()
run = generate_candidates(passages, backends, GeneratorConfig())

print(f"\n{len(run.candidates)} candidates after canonical ordering and dedup:")
for c in run.candidates:
    seed = f"  seed={c.seed_answer.text!r}" if c.seed_answer else ""
    rt = f"  roundtrip_f1={c.roundtrip_f1:.2f}" if c.roundtrip_f1 is not None else ""
    dup = f"  duplicate_of={c.duplicate_of}" if c.duplicate_of else ""
    print(f"  {c.candidate_id} [{c.strategy:15s}] {c.status:18s} {c.question_text}{seed}{rt}{dup}")

low = [c for c in run.pool if c.roundtrip_f1 is not None and c.roundtrip_f1 < 0.5]
print(f"\n{len(low)} candidates would carry a round-trip warning badge (< 0.5);")
print("the score is advisory: the answerability filter is the real gate.")
