"""Near-duplicate removal over the merged candidate list.

A greedy first-wins scan in canonical order: a candidate survives iff its
question embedding stays below the similarity threshold against every
previously kept candidate. The scan runs once over the whole document's
merged list (all passages, both strategies), so survivors are pairwise
dissimilar document-wide.
"""

from __future__ import annotations

from ..backends.contracts import EmbeddingBackend, embed
from .candidates import STATUS_REJECTED_DUPLICATE, CandidateQuestion
from .similarity import cosine_similarity


def dedup(
    candidates: list[CandidateQuestion],
    embedding_backend: EmbeddingBackend,
    threshold: float,
) -> list[CandidateQuestion]:
    """Return kept candidates in order; marks the rest rejected_duplicate.

    Each rejected candidate points at the earlier kept candidate that
    shadowed it. Input must already be in canonical order.
    """
    if not 0.0 < threshold <= 1.0:
        raise ValueError("threshold must be in (0, 1]")
    kept: list[tuple[CandidateQuestion, object]] = []
    for cand in candidates:
        vector = embed(embedding_backend, cand.question_text)
        shadowing = None
        for kept_cand, kept_vec in kept:
            if cosine_similarity(vector, kept_vec) >= threshold:
                shadowing = kept_cand
                break
        if shadowing is None:
            kept.append((cand, vector))
        else:
            cand.status = STATUS_REJECTED_DUPLICATE
            cand.duplicate_of = shadowing.candidate_id
    return [cand for cand, _ in kept]
