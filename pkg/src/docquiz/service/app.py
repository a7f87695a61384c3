"""HTTP service exposing the pipeline with background job execution."""

from __future__ import annotations

from pathlib import Path

from fastapi import Depends, FastAPI, Request, Response, UploadFile
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from ..backends.registry import BackendRegistry
from ..errors import (
    DocquizError,
    DuplicateSelection,
    EmptyAnnotations,
    EmptySelection,
    InvalidState,
    NotFound,
    NothingSelected,
    NotVerified,
    UnknownCandidate,
    UnknownDocument,
    UnknownSection,
    VersionConflict,
)
from ..ingest.extract import mime_for_filename
from ..qgen.config import GeneratorConfig
from .config import ServiceConfig
from .jobs import JobManager
from .store import FileStore
from .workflow import QuizWorkflow

_STATUS_BY_ERROR: list[tuple[type, int]] = [
    (DuplicateSelection, 422),
    (EmptySelection, 422),
    (NotVerified, 422),
    (NothingSelected, 422),
    (EmptyAnnotations, 422),
    (InvalidState, 409),
    (VersionConflict, 409),
    (NotFound, 404),
    (UnknownDocument, 404),
    (UnknownSection, 404),
    (UnknownCandidate, 404),
]


class SessionCreateBody(BaseModel):
    doc_id: str
    config: dict = Field(default_factory=dict)


class SectionsBody(BaseModel):
    section_ids: list[str]


class SelectionsBody(BaseModel):
    candidate_ids: list[str]


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    store = FileStore(config.storage_dir)
    registry = (
        BackendRegistry.from_file(config.backend_registry)
        if config.backend_registry
        else None
    )
    workflow = QuizWorkflow(store, registry)
    jobs = JobManager(max_workers=2)

    app = FastAPI(title="docquiz", version="0.1.0")
    app.state.workflow = workflow
    app.state.jobs = jobs
    app.state.config = config

    def require_auth(request: Request) -> None:
        if not config.token:
            return
        header = request.headers.get("authorization", "")
        if header != f"Bearer {config.token}":
            raise _Unauthorized()

    class _Unauthorized(Exception):
        pass

    @app.exception_handler(_Unauthorized)
    async def unauthorized_handler(request: Request, exc: _Unauthorized):
        return JSONResponse(status_code=401, content={"error": "invalid or missing token"})

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(DocquizError)
    async def domain_error_handler(request: Request, exc: DocquizError):
        for error_type, status in _STATUS_BY_ERROR:
            if isinstance(exc, error_type):
                return JSONResponse(
                    status_code=status,
                    content={"error": str(exc), "type": type(exc).__name__},
                )
        return JSONResponse(status_code=500, content={"error": str(exc)})

    auth = Depends(require_auth)

    @app.post("/documents", status_code=202, dependencies=[auth])
    async def upload_document(file: UploadFile):
        raw = await file.read()
        filename = file.filename or "upload"
        mime = mime_for_filename(filename)

        def work(job):
            job.set_total(1)
            result = workflow.ingest_bytes(raw, filename, mime)
            job.advance(1)
            return result.doc_id

        job = jobs.submit("ingest", work)
        return job.to_dict()

    @app.get("/documents/{doc_id}/sections", dependencies=[auth])
    def get_sections(doc_id: str):
        return workflow.section_tree(doc_id)

    @app.get("/documents/{doc_id}/structure", dependencies=[auth])
    def get_structure(doc_id: str):
        return Response(
            content=workflow.structure_json(doc_id), media_type="application/json"
        )

    @app.post("/sessions", dependencies=[auth])
    def create_session(body: SessionCreateBody):
        merged = {**config.pipeline_defaults, **body.config}
        try:
            generator_config = GeneratorConfig.from_dict(merged)
        except TypeError as exc:
            raise ValueError(f"bad config: {exc}") from exc
        session = workflow.create_session(body.doc_id, generator_config)
        return session.to_dict()

    @app.post("/sessions/{session_id}/sections", dependencies=[auth])
    def set_sections(session_id: str, body: SectionsBody):
        return workflow.choose_sections(session_id, body.section_ids).to_dict()

    @app.post("/sessions/{session_id}/generate", status_code=202, dependencies=[auth])
    def generate(session_id: str):
        # Surface a 404/409 now rather than in the job.
        session, _ = workflow.load_session(session_id)
        if session.state != "sections_chosen":
            raise InvalidState(f"session {session_id} is {session.state}")

        def work(job):
            workflow.run_generation(session_id, progress=job)
            return session_id

        job = jobs.submit("generate", work)
        return job.to_dict()

    @app.get("/jobs/{job_id}", dependencies=[auth])
    def get_job(job_id: str):
        job = jobs.get(job_id)
        if job is None:
            raise NotFound(f"no job {job_id}")
        return job.to_dict()

    @app.get("/sessions/{session_id}", dependencies=[auth])
    def get_session(session_id: str):
        session, _ = workflow.load_session(session_id)
        return session.to_dict()

    @app.get("/sessions/{session_id}/candidates", dependencies=[auth])
    def get_candidates(session_id: str, status: str = "all"):
        if status not in ("all", "verified", "generated", "rejected_duplicate", "rejected_no_answer"):
            raise ValueError(f"unknown status filter {status!r}")
        workflow.load_session(session_id)  # 404 on unknown session
        payload = workflow.candidates_jsonl(session_id, status)
        return Response(content=payload, media_type="application/x-ndjson")

    @app.post("/sessions/{session_id}/selections", dependencies=[auth])
    def set_selections(session_id: str, body: SelectionsBody):
        return workflow.select(session_id, body.candidate_ids).to_dict()

    @app.get("/sessions/{session_id}/quiz", dependencies=[auth])
    def get_quiz(session_id: str, audience: str = "trainer", format: str = "markdown"):
        data, content_type, filename = workflow.export(session_id, audience, format)
        return Response(
            content=data,
            media_type=content_type,
            headers={"Content-Disposition": f'attachment; filename="{filename}"'},
        )

    @app.get("/sessions/{session_id}/annotation-sheet", dependencies=[auth])
    def get_annotation_sheet(session_id: str):
        return workflow.annotation_sheet(session_id)

    # Serve the trainer UI bundle when present (checkout layout by default).
    ui_dir = (
        Path(config.ui_dir)
        if config.ui_dir
        else Path(__file__).resolve().parents[3] / "frontend" / "dist"
    )
    if ui_dir.is_dir():
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def run(config: ServiceConfig) -> None:
    import uvicorn

    uvicorn.run(create_app(config), host="0.0.0.0", port=config.port)
