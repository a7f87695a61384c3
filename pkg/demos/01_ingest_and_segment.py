"""Walk a raw document through ingestion: text extraction, header/footer
removal, heading detection, and passage enumeration.

Run with: python demos/01_ingest_and_segment.py
"""

from docquiz.ingest import (
    enumerate_passages,
    extract_text,
    segment,
    strip_boilerplate,
    strip_parentheticals,
)
from docquiz.ingest.types import PageText, SourceDocument

SAMPLE = """\
1 Purpose and scope
This procedure defines the configuration management activities for
operational products. The quality manager approves the configuration
management plan.

1.1 Applicability
The procedure applies to every operational product (e.g. ground stations)
and to the support services.

2 Responsibilities
The Review Board examines anomaly reports weekly.
"""

doc = extract_text(SAMPLE.encode(), "plain_text", filename="sample.txt")
print(f"doc_id = {doc.doc_id[:16]}…  ({len(doc.pages)} page)")

# Boilerplate removal matters for multi-page inputs: build one to show it.
footer_doc = SourceDocument(
    doc_id=doc.doc_id,
    filename="footered.txt",
    mime="plain_text",
    pages=tuple(
        PageText(i, (f"Body line unique to page {chr(97 + i)}", f"Page {i + 1} of 3"))
        for i in range(3)
    ),
)
cleaned = strip_boilerplate(footer_doc)
print("\nfooter lines before/after stripping:",
      sum("Page" in l for p in footer_doc.pages for l in p.lines), "->",
      sum("Page" in l for p in cleaned.pages for l in p.lines))

structure = segment(strip_boilerplate(doc))
print("\nsection tree:")
for sec in structure.sections:
    print(f"  {'  ' * (sec.depth - 1)}{sec.number} {sec.title}  [{sec.section_id}]")

passages, dropped = enumerate_passages(structure, doc, max_passage_tokens=480)
print(f"\n{len(passages)} passages, {len(dropped)} dropped:")
for p in passages:
    print(f"  {p.passage_id}  ({p.approx_tokens} tokens)  {p.text[:60]}…")

print("\nparenthetical stripping (opt-in per run):")
example = "applies to every operational product (e.g. ground stations)"
print(f"  before: {example}")
print(f"  after:  {strip_parentheticals(example)}")
