from __future__ import annotations

import pytest

from docquiz.ingest import enumerate_passages, extract_text, segment
from docquiz.textutil import approx_token_count, sentence_spans


def _structure_for(text: str):
    doc = extract_text(text.encode(), "plain_text")
    return segment(doc), doc


def _oracle_pack(text: str, budget: int) -> list[int]:
    """Independent greedy packing: returns token counts per chunk."""
    sizes = [approx_token_count(text[s:e]) for s, e in sentence_spans(text)]
    sizes = [s for s in sizes if s <= budget]
    chunks = []
    current = 0
    for size in sizes:
        if current and current + size > budget:
            chunks.append(current)
            current = 0
        current += size
    if current:
        chunks.append(current)
    return chunks


def test_small_paragraph_is_one_passage():
    text = "1 S\n" + " ".join(
        ["The team reviews the plan each week in detail now."] * 3
    )
    structure, doc = _structure_for(text)
    passages, dropped = enumerate_passages(structure, doc, 480)
    assert len(passages) == 1
    assert not dropped
    assert passages[0].approx_tokens <= 480


def test_greedy_split_matches_oracle():
    sentence = " ".join(f"w{i}" for i in range(59)) + " end."  # 60 tokens
    paragraph = " ".join([sentence] * 10)
    structure, doc = _structure_for("1 S\n" + paragraph)
    passages, dropped = enumerate_passages(structure, doc, 200)
    assert not dropped
    assert len(passages) == 4
    assert [p.approx_tokens for p in passages] == _oracle_pack(paragraph, 200)
    assert all(p.approx_tokens <= 200 for p in passages)
    # Sentence order is preserved: concatenation equals the paragraph.
    assert " ".join(p.text for p in passages).split() == paragraph.split()


def test_oversized_sentence_dropped_and_recorded():
    big = " ".join(f"w{i}" for i in range(600)) + "."
    structure, doc = _structure_for("1 S\n" + big)
    passages, dropped = enumerate_passages(structure, doc, 480)
    assert passages == []
    assert len(dropped) == 1
    assert dropped[0].approx_tokens == 600
    assert dropped[0].section_id == structure.sections[0].section_id


def test_oversized_sentence_among_normal_ones():
    big = " ".join(f"w{i}" for i in range(90)) + "."
    text = "1 S\nShort sentence one here. " + big + " Short sentence two here."
    structure, doc = _structure_for(text)
    passages, dropped = enumerate_passages(structure, doc, 64)
    assert len(dropped) == 1
    joined = " ".join(p.text for p in passages)
    assert "Short sentence one here." in joined
    assert "Short sentence two here." in joined
    assert "w50" not in joined


def test_budget_floor():
    structure, doc = _structure_for("1 S\nbody")
    with pytest.raises(ValueError):
        enumerate_passages(structure, doc, 16)


def test_sections_reference_their_passages():
    structure, doc = _structure_for("1 A\npara one\n\n1.1 B\npara two")
    passages, _ = enumerate_passages(structure, doc, 480)
    for passage in passages:
        section = structure.section_by_id(passage.section_id)
        assert passage.passage_id in section.passages
    ids = [p.passage_id for p in passages]
    assert len(set(ids)) == len(ids)


def test_full_ingest_chain_is_byte_deterministic(fixture_bytes):
    from docquiz.ingest import extract_text, strip_boilerplate
    from docquiz.ingest.serialize import canonical_json_bytes, structure_to_dict

    def run():
        doc = extract_text(fixture_bytes, "plain_text", filename="procedure.txt")
        doc = strip_boilerplate(doc)
        structure = segment(doc)
        passages, dropped = enumerate_passages(structure, doc, 480)
        return canonical_json_bytes(structure_to_dict(structure, passages, dropped))

    assert run() == run()


def test_passage_ids_stable_under_section_subsetting():
    from docquiz.ingest.types import DocumentStructure

    structure, doc = _structure_for("1 A\npara one\n\n2 B\npara two")
    full, _ = enumerate_passages(structure, doc, 480)
    subset = DocumentStructure(
        doc_id=structure.doc_id, sections=[structure.sections[1]]
    )
    partial, _ = enumerate_passages(subset, doc, 480)
    assert [p.passage_id for p in partial] == [full[1].passage_id]
    assert partial[0].text == full[1].text
