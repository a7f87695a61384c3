"""Batch command-line interface covering the full workflow headlessly.

Exit codes: 0 success, 1 domain error, 2 usage error. Commands print JSON to
standard output unless ``-o`` routes export bytes to a file.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .backends.registry import BackendRegistry
from .errors import DocquizError
from .evaluation import compute_metrics, load_annotation_sheet
from .qgen.config import ALL_STRATEGIES, GeneratorConfig
from .service.config import ENV_REGISTRY, ENV_STORAGE, ServiceConfig
from .service.store import FileStore
from .service.workflow import QuizWorkflow


def _workflow(storage_dir: str, backends_path: str | None) -> QuizWorkflow:
    registry = BackendRegistry.from_file(backends_path) if backends_path else None
    return QuizWorkflow(FileStore(storage_dir), registry)


def _emit(data) -> None:
    click.echo(json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2))


@click.group()
@click.option(
    "--storage-dir",
    envvar=ENV_STORAGE,
    default=".docquiz-data",
    show_default=True,
    help="Directory for the embedded record store.",
)
@click.pass_context
def cli(ctx: click.Context, storage_dir: str) -> None:
    """Generate curated quizzes from procedure documents."""
    ctx.ensure_object(dict)
    ctx.obj["storage_dir"] = storage_dir


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.pass_context
def ingest(ctx: click.Context, file: Path) -> None:
    """Ingest a document (pdf, txt, md) and store its structure."""
    workflow = _workflow(ctx.obj["storage_dir"], None)
    result = workflow.ingest_bytes(file.read_bytes(), file.name)
    _emit(
        {
            "doc_id": result.doc_id,
            "filename": result.filename,
            "n_sections": result.n_sections,
            "n_passages": result.n_passages,
            "n_dropped": result.n_dropped,
        }
    )


@cli.command()
@click.argument("doc_id")
@click.pass_context
def sections(ctx: click.Context, doc_id: str) -> None:
    """Print the section tree of an ingested document."""
    workflow = _workflow(ctx.obj["storage_dir"], None)
    _emit(workflow.section_tree(doc_id))


@cli.command()
@click.argument("doc_id")
@click.option("--sections", "section_numbers", required=True,
              help="Comma-separated section numbers or ids, e.g. 1,3.")
@click.option("--beams", default=5, show_default=True)
@click.option("--dedup-threshold", default=0.8, show_default=True)
@click.option("--strip-parentheticals", is_flag=True, default=False,
              help="Remove inline examples before generation.")
@click.option("--cap", default=10, show_default=True,
              help="Questions kept per passage after dedup.")
@click.option("--strategies", default=",".join(ALL_STRATEGIES), show_default=True)
@click.option("--backends", "backends_path", envvar=ENV_REGISTRY, default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="Backend registry JSON; defaults to the built-in mocks.")
@click.pass_context
def generate(
    ctx: click.Context,
    doc_id: str,
    section_numbers: str,
    beams: int,
    dedup_threshold: float,
    strip_parentheticals: bool,
    cap: int,
    strategies: str,
    backends_path: str | None,
) -> None:
    """Create a session over the chosen sections and run the full pipeline."""
    workflow = _workflow(ctx.obj["storage_dir"], backends_path)
    config = GeneratorConfig(
        num_beams=beams,
        questions_per_passage_cap=cap,
        dedup_threshold=dedup_threshold,
        strategies=tuple(s.strip() for s in strategies.split(",") if s.strip()),
        strip_parentheticals=strip_parentheticals,
    )
    session = workflow.create_session(doc_id, config)
    workflow.choose_sections_by_number(
        session.session_id, [s.strip() for s in section_numbers.split(",") if s.strip()]
    )
    session = workflow.run_generation(session.session_id)
    _emit(session.to_dict())


@cli.command()
@click.argument("session_id")
@click.option("--ids", required=True, help="Comma-separated candidate ids, in quiz order.")
@click.pass_context
def select(ctx: click.Context, session_id: str, ids: str) -> None:
    """Select verified candidates for the quiz."""
    workflow = _workflow(ctx.obj["storage_dir"], None)
    candidate_ids = [c.strip() for c in ids.split(",") if c.strip()]
    session = workflow.select(session_id, candidate_ids)
    _emit(session.to_dict())


@cli.command()
@click.argument("session_id")
@click.option("--audience", type=click.Choice(["trainee", "trainer"]), default="trainer",
              show_default=True)
@click.option("--format", "fmt", type=click.Choice(["markdown", "json", "html"]),
              default="markdown", show_default=True)
@click.option("-o", "out_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_context
def export(ctx: click.Context, session_id: str, audience: str, fmt: str, out_path: Path | None) -> None:
    """Export the curated quiz; -o writes the raw bytes to a file."""
    workflow = _workflow(ctx.obj["storage_dir"], None)
    data, content_type, filename = workflow.export(session_id, audience, fmt)
    if out_path is not None:
        out_path.write_bytes(data)
        _emit({"written": str(out_path), "filename": filename, "bytes": len(data)})
    else:
        _emit(
            {
                "filename": filename,
                "content_type": content_type,
                "content": data.decode("utf-8"),
            }
        )


@cli.command("eval")
@click.argument("annotations", type=click.Path(exists=True, dir_okay=False, path_type=Path))
def eval_cmd(annotations: Path) -> None:
    """Compute accuracy metrics from a completed annotation sheet."""
    records = load_annotation_sheet(annotations.read_text(encoding="utf-8"))
    report = compute_metrics(records)
    _emit(report.to_dict())


@cli.command()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--port", default=None, type=int)
@click.pass_context
def serve(ctx: click.Context, config_path: str | None, port: int | None) -> None:
    """Run the HTTP service."""
    from .service.app import run

    config = ServiceConfig.load(config_path)
    if port is not None:
        config.port = port
    if config_path is None:
        config.storage_dir = ctx.obj["storage_dir"]
    run(config)


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return 2
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        return 130
    except DocquizError as exc:
        click.echo(
            json.dumps({"error": str(exc), "type": type(exc).__name__}), err=True
        )
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
