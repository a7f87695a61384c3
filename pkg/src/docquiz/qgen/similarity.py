"""Cosine similarity over embedding vectors."""

from __future__ import annotations

import math

from ..backends.contracts import EmbeddingVector
from ..errors import DimensionMismatch, ZeroVector


def cosine_similarity(u: EmbeddingVector, v: EmbeddingVector) -> float:
    if u.dim != v.dim:
        raise DimensionMismatch(f"dims differ: {u.dim} != {v.dim}")
    norm_u = math.sqrt(math.fsum(x * x for x in u.values))
    norm_v = math.sqrt(math.fsum(x * x for x in v.values))
    if norm_u == 0.0 or norm_v == 0.0:
        raise ZeroVector("cosine similarity undefined for zero vectors")
    dot = math.fsum(x * y for x, y in zip(u.values, v.values))
    return dot / (norm_u * norm_v)
