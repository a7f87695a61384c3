"""Adapters for locally stored transformer checkpoints.

These adapters load models from a local directory given in the backend
parameters; nothing is fetched over the network at inference time. They are
imported lazily so the rest of the package works without torch installed,
and they are exercised only by the operator-driven smoke tests (model
behavior is checkpoint-dependent by nature).

Expected parameters:
    model_dir        path to the checkpoint directory (required)
    device           torch device string, default "cpu"
    length_penalty   generation length penalty, default 1.0
    no_repeat_ngram  default 3
"""

from __future__ import annotations

from .contracts import (
    KIND_EMBEDDING,
    KIND_GENERATIVE,
    KIND_QA,
    AnswerSpan,
    EmbeddingVector,
    GeneratedSequence,
    GenerationRequest,
    QAResult,
)
from ..errors import BackendUnavailable


def build(spec):
    if spec.kind == KIND_GENERATIVE:
        return HFSeq2SeqBackend(spec)
    if spec.kind == KIND_QA:
        return HFExtractiveQABackend(spec)
    if spec.kind == KIND_EMBEDDING:
        return SentenceEmbeddingBackend(spec)
    raise BackendUnavailable(f"unknown backend kind {spec.kind!r}")


def _model_dir(spec):
    model_dir = spec.parameters.get("model_dir")
    if not model_dir:
        raise BackendUnavailable(f"{spec.backend_id}: parameters.model_dir is required")
    return model_dir


class HFSeq2SeqBackend:
    kind = KIND_GENERATIVE

    def __init__(self, spec):
        try:
            import torch  # noqa: F401
            from transformers import AutoModelForSeq2SeqLM, AutoTokenizer
        except ImportError as exc:
            raise BackendUnavailable(f"transformers unavailable: {exc}") from exc
        self.backend_id = spec.backend_id
        self.context_budget_tokens = spec.context_budget_tokens
        self.max_concurrent_calls = spec.max_concurrent_calls
        self._params = spec.parameters
        self._tokenizer = AutoTokenizer.from_pretrained(_model_dir(spec))
        self._model = AutoModelForSeq2SeqLM.from_pretrained(_model_dir(spec))
        self._model.to(spec.parameters.get("device", "cpu"))
        self._model.eval()

    def run_generate(self, request: GenerationRequest) -> list[GeneratedSequence]:
        import torch

        inputs = self._tokenizer(
            request.input_text, return_tensors="pt", truncation=True,
            max_length=self.context_budget_tokens,
        ).to(self._model.device)
        with torch.no_grad():
            out = self._model.generate(
                **inputs,
                num_beams=request.num_beams,
                num_return_sequences=request.num_return_sequences,
                max_new_tokens=request.max_output_tokens,
                length_penalty=float(self._params.get("length_penalty", 1.0)),
                no_repeat_ngram_size=int(self._params.get("no_repeat_ngram", 3)),
                output_scores=True,
                return_dict_in_generate=True,
            )
        texts = self._tokenizer.batch_decode(out.sequences, skip_special_tokens=True)
        scores = out.sequences_scores.tolist() if out.sequences_scores is not None else [
            0.0 for _ in texts
        ]
        ordered = sorted(zip(texts, scores), key=lambda pair: -pair[1])
        return [
            GeneratedSequence(text=text.strip(), score=score, beam_rank=rank)
            for rank, (text, score) in enumerate(ordered)
        ]


class HFExtractiveQABackend:
    """SQuAD2-style extractive QA with an explicit no-answer score."""

    kind = KIND_QA

    def __init__(self, spec):
        try:
            import torch  # noqa: F401
            from transformers import AutoModelForQuestionAnswering, AutoTokenizer
        except ImportError as exc:
            raise BackendUnavailable(f"transformers unavailable: {exc}") from exc
        self.backend_id = spec.backend_id
        self.context_budget_tokens = spec.context_budget_tokens
        self.max_concurrent_calls = spec.max_concurrent_calls
        self._tokenizer = AutoTokenizer.from_pretrained(_model_dir(spec))
        self._model = AutoModelForQuestionAnswering.from_pretrained(_model_dir(spec))
        self._model.to(spec.parameters.get("device", "cpu"))
        self._model.eval()

    def run_answer(self, question: str, context: str) -> QAResult:
        import torch

        enc = self._tokenizer(
            question, context, return_tensors="pt", truncation="only_second",
            max_length=self.context_budget_tokens, return_offsets_mapping=True,
        )
        offsets = enc.pop("offset_mapping")[0].tolist()
        enc = enc.to(self._model.device)
        with torch.no_grad():
            out = self._model(**enc)
        start_logits = out.start_logits[0]
        end_logits = out.end_logits[0]
        no_answer_score = float(start_logits[0] + end_logits[0])

        sequence_ids = enc.sequence_ids(0) if hasattr(enc, "sequence_ids") else None
        best = None
        n = len(offsets)
        for i in range(n):
            if sequence_ids is not None and sequence_ids[i] != 1:
                continue
            for j in range(i, min(i + 30, n)):
                if sequence_ids is not None and sequence_ids[j] != 1:
                    continue
                score = float(start_logits[i] + end_logits[j])
                if best is None or score > best[0]:
                    best = (score, i, j)
        if best is None:
            return QAResult("no_answer", None, span_score=no_answer_score - 1.0,
                            no_answer_score=no_answer_score)
        span_score, i, j = best
        start_char, end_char = offsets[i][0], offsets[j][1]
        if end_char <= start_char:
            return QAResult("no_answer", None, span_score=span_score,
                            no_answer_score=max(no_answer_score, span_score + 1.0))
        if span_score <= no_answer_score:
            return QAResult("no_answer", None, span_score=span_score,
                            no_answer_score=no_answer_score)
        return QAResult(
            "span",
            AnswerSpan(start_char, end_char, context[start_char:end_char]),
            span_score=span_score,
            no_answer_score=no_answer_score,
        )


class SentenceEmbeddingBackend:
    kind = KIND_EMBEDDING

    def __init__(self, spec):
        try:
            from sentence_transformers import SentenceTransformer
        except ImportError as exc:
            raise BackendUnavailable(f"sentence-transformers unavailable: {exc}") from exc
        self.backend_id = spec.backend_id
        self.max_concurrent_calls = spec.max_concurrent_calls
        self._model = SentenceTransformer(_model_dir(spec), device=spec.parameters.get("device", "cpu"))

    def run_embed(self, text: str) -> EmbeddingVector:
        vec = self._model.encode([text], normalize_embeddings=True)[0]
        return EmbeddingVector(dim=len(vec), values=tuple(float(v) for v in vec))
