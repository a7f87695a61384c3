"""Exception hierarchy shared across the pipeline.

Every error the library raises deliberately derives from :class:`DocquizError`
so callers (CLI, HTTP service) can map domain failures to exit codes and
status codes in one place.
"""

from __future__ import annotations


class DocquizError(Exception):
    """Base class for all domain errors."""


# --- ingestion ---

class UnsupportedFormat(DocquizError):
    pass


class CorruptDocument(DocquizError):
    pass


class NoTextLayer(DocquizError):
    """PDF contained pages but no extractable text operators."""


# --- model backends ---

class BackendError(DocquizError):
    pass


class InputTooLong(BackendError):
    pass


class BackendUnavailable(BackendError):
    pass


# --- vector math ---

class DimensionMismatch(DocquizError):
    pass


class ZeroVector(DocquizError):
    pass


# --- curation sessions ---

class UnknownDocument(DocquizError):
    pass


class UnknownSection(DocquizError):
    pass


class EmptySelection(DocquizError):
    pass


class InvalidState(DocquizError):
    pass


class UnknownCandidate(DocquizError):
    pass


class DuplicateSelection(UnknownCandidate):
    """Same candidate id passed twice in one selection."""


class NotVerified(DocquizError):
    pass


class NothingSelected(DocquizError):
    pass


class PipelineFailed(DocquizError):
    pass


# --- storage ---

class NotFound(DocquizError):
    pass


class VersionConflict(DocquizError):
    pass


# --- evaluation ---

class EmptyAnnotations(DocquizError):
    pass


class DuplicateAnnotation(DocquizError):
    pass
