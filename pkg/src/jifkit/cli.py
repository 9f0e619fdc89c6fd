"""Command-line frontend.

Subcommands: ``compute | correlate | rank | validate | scatter | serve``.
By default commands run fully in-process; ``--server URL`` switches to a
running HTTP service instead, sending the same request documents.  Exit
codes: 0 success, 1 analysis failure (or validation warnings), 2 usage
and load errors (or validation errors).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from pydantic import ValidationError

from . import render
from .service import core, schemas
from .service.core import EXIT_ANALYSIS, EXIT_OK, EXIT_USAGE, ServiceError

BUILTIN_PREFIX = "builtin:"
OUTPUT_DIR_ENV = "JIFKIT_OUTPUT_DIR"


class UsageError(Exception):
    """Client-side misuse: bad flags, unreadable files, empty selections."""


@dataclass(frozen=True)
class RunConfig:
    """Options shared by the data subcommands."""

    dataset: str | None
    from_table: str | None
    evaluation_year: int | None
    indicators: tuple[str, ...] | None
    format: str
    output: str | None
    strict: bool
    echo_tolerances: bool
    full_precision: bool
    server: str | None


# --------------------------------------------------------------------------- #
# backends
# --------------------------------------------------------------------------- #


class _LocalBackend:
    """Run operations in-process and return response documents."""

    def call(self, operation: str, request: Any) -> dict:
        return getattr(core, operation)(request).model_dump()


class _HttpBackend:
    """Send operations to a running service."""

    def __init__(self, base_url: str):
        self.base_url = base_url.rstrip("/")

    def call(self, operation: str, request: Any) -> dict:
        import httpx

        response = httpx.post(
            f"{self.base_url}/v1/{operation}",
            json=request.model_dump(exclude_none=True),
            timeout=60.0,
        )
        if response.status_code >= 400:
            raise self._to_error(response)
        return response.json()

    @staticmethod
    def _to_error(response: Any) -> ServiceError:
        try:
            body = response.json()
        except ValueError:
            body = {}
        error = body.get("error") if isinstance(body, Mapping) else None
        if isinstance(error, Mapping):
            return ServiceError(
                str(error.get("code", "error")),
                str(error.get("message", response.text)),
                http_status=response.status_code,
                exit_code=int(error.get("exit_code", EXIT_ANALYSIS)),
            )
        # Anything else (e.g. request-validation detail) counts as misuse.
        return ServiceError("http-error", response.text.strip(),
                            http_status=response.status_code,
                            exit_code=EXIT_USAGE)


def _backend(cfg: RunConfig):
    return _HttpBackend(cfg.server) if cfg.server else _LocalBackend()


# --------------------------------------------------------------------------- #
# argument handling
# --------------------------------------------------------------------------- #


def _read_text(path_text: str, what: str) -> str:
    path = Path(path_text)
    if not path.is_file():
        raise UsageError(f"{what} not found: {path_text}")
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {what} {path_text}: {exc}") from exc


def _dataset_source(text: str) -> schemas.DatasetSource:
    """A dataset argument is a builtin id (``builtin:paper2013`` or a
    bare known id), a JSON document path, or a CSV directory."""
    if text.startswith(BUILTIN_PREFIX):
        return schemas.DatasetSource(builtin=text[len(BUILTIN_PREFIX):])
    from .corpus.builtin import BUILTIN_DATASETS

    if text in BUILTIN_DATASETS:
        return schemas.DatasetSource(builtin=text)
    path = Path(text)
    if path.is_dir():
        return schemas.DatasetSource(
            csv_journals=_read_text(str(path / "journals.csv"), "journals file"),
            csv_citations=_read_text(str(path / "citations.csv"), "citations file"),
        )
    return schemas.DatasetSource(json_text=_read_text(text, "dataset"))


def _table_source(text: str) -> schemas.TableSource:
    if text.startswith(BUILTIN_PREFIX):
        return schemas.TableSource(builtin=text[len(BUILTIN_PREFIX):])
    from .analysis.published import BUILTIN_TABLES

    if text in BUILTIN_TABLES:
        return schemas.TableSource(builtin=text)
    content = _read_text(text, "table")
    if content.lstrip().startswith("{"):
        try:
            return schemas.TableSource(document=json.loads(content))
        except ValueError as exc:
            raise UsageError(f"table {text} is not valid JSON: {exc}") from exc
    return schemas.TableSource(csv_text=content)


def _indicator_list(text: str | None) -> tuple[str, ...] | None:
    if text is None:
        return None
    names = tuple(part.strip() for part in text.split(","))
    if not all(names) or not names:
        raise UsageError("indicator list is empty")
    return names


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        dataset=getattr(args, "dataset", None),
        from_table=getattr(args, "from_table", None),
        evaluation_year=getattr(args, "evaluation_year", None),
        indicators=_indicator_list(getattr(args, "indicators", None)),
        format=getattr(args, "format", "markdown"),
        output=getattr(args, "output", None),
        strict=bool(getattr(args, "strict", False)),
        echo_tolerances=bool(getattr(args, "echo_tolerances", False)),
        full_precision=bool(getattr(args, "full_precision", False)),
        server=getattr(args, "server", None),
    )


def _table_request_parts(cfg: RunConfig) -> dict:
    """dataset/table source fields for correlate, rank and scatter."""
    if cfg.from_table is not None:
        return {
            "table": _table_source(cfg.from_table),
            "indicators": list(cfg.indicators) if cfg.indicators else None,
        }
    return {
        "dataset": _dataset_source(cfg.dataset or "paper2013"),
        "indicators": list(cfg.indicators) if cfg.indicators else None,
        "evaluation_year": cfg.evaluation_year,
        "strict": cfg.strict,
    }


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.echo_tolerances:
        sys.stdout.write(render.TOLERANCES_TEXT)
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------- #
# subcommand bodies
# --------------------------------------------------------------------------- #


def cmd_compute(cfg: RunConfig) -> int:
    request = schemas.ComputeRequest(
        dataset=_dataset_source(cfg.dataset or "paper2013"),
        indicators=list(cfg.indicators) if cfg.indicators else None,
        evaluation_year=cfg.evaluation_year,
        strict=cfg.strict,
    )
    doc = _backend(cfg).call("compute", request)
    if cfg.format == "json":
        text = render.table_json(doc)
    elif cfg.format == "csv":
        text = render.table_csv(doc, full_precision=cfg.full_precision)
    else:
        text = render.table_markdown(doc, full_precision=cfg.full_precision)
    _emit(cfg, text)
    return EXIT_OK


def cmd_correlate(cfg: RunConfig, use: str) -> int:
    request = schemas.CorrelateRequest(use=use, **_table_request_parts(cfg))
    doc = _backend(cfg).call("correlate", request)
    if cfg.format == "json":
        text = render.matrix_json(doc)
    elif cfg.format == "csv":
        text = render.matrix_csv(doc)
    else:
        text = render.matrix_markdown(doc)
    _emit(cfg, text)
    return EXIT_OK


def cmd_rank(cfg: RunConfig) -> int:
    request = schemas.RankRequest(**_table_request_parts(cfg))
    doc = _backend(cfg).call("rank", request)
    if cfg.format == "json":
        text = render.ranks_json(doc)
    elif cfg.format == "csv":
        text = render.ranks_csv(doc, full_precision=cfg.full_precision)
    else:
        text = render.ranks_markdown(doc, full_precision=cfg.full_precision)
    _emit(cfg, text)
    return EXIT_OK


def cmd_validate(cfg: RunConfig, required: str | None) -> int:
    request = schemas.ValidateRequest(
        dataset=_dataset_source(cfg.dataset or "paper2013"),
        evaluation_year=cfg.evaluation_year,
        strict=cfg.strict,
        required=list(_indicator_list(required) or ()),
    )
    doc = _backend(cfg).call("validate", request)
    if cfg.format == "json":
        text = render.report_json(doc)
    elif cfg.format == "csv":
        text = render.report_csv(doc)
    else:
        text = render.report_text(doc)
    _emit(cfg, text)
    severity = doc["severity"]
    if severity == "errors":
        return EXIT_USAGE
    if severity == "warnings":
        return EXIT_ANALYSIS
    return EXIT_OK


def cmd_scatter(cfg: RunConfig, x: str, y: str, *, svg: bool,
                output_dir: str | None) -> int:
    from .analysis.scatter import points_to_csv, points_to_svg

    request = schemas.ScatterRequest(x=x, y=y, **_table_request_parts(cfg))
    doc = _backend(cfg).call("scatter", request)
    points = [(p["journal"], p["x"], p["y"]) for p in doc["points"]]
    directory = Path(output_dir or os.environ.get(OUTPUT_DIR_ENV) or ".")
    directory.mkdir(parents=True, exist_ok=True)
    if cfg.echo_tolerances:
        sys.stdout.write(render.TOLERANCES_TEXT)
    stem = f"{x}_vs_{y}"
    csv_path = directory / f"{stem}.csv"
    csv_path.write_text(points_to_csv(points, full_precision=cfg.full_precision),
                        encoding="utf-8")
    sys.stdout.write(f"wrote {csv_path}\n")
    if svg:
        svg_path = directory / f"{stem}.svg"
        svg_path.write_text(points_to_svg(points, x, y), encoding="utf-8")
        sys.stdout.write(f"wrote {svg_path}\n")
    return EXIT_OK


def cmd_serve(host: str, port: int) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)
    return EXIT_OK


# --------------------------------------------------------------------------- #
# parser
# --------------------------------------------------------------------------- #


def _add_common(sub: argparse.ArgumentParser, *, table_input: bool,
                formats: bool = True) -> None:
    sub.add_argument("--dataset", default=None,
                     help="dataset: JSON file, CSV directory, or builtin id "
                          "(default: builtin:paper2013)")
    if table_input:
        sub.add_argument("--from-table", dest="from_table", default=None,
                         help="use a rendered table (CSV/JSON file or builtin "
                              "id, e.g. builtin:published2013) instead of "
                              "computing from a dataset")
    sub.add_argument("--indicators", default=None,
                     help="comma-separated indicator names (default: all)")
    sub.add_argument("--evaluation-year", dest="evaluation_year", type=int,
                     default=None, help="evaluation year (required for CSV "
                                        "directory datasets)")
    if formats:
        sub.add_argument("--format", choices=("csv", "json", "markdown"),
                         default="markdown", help="output format")
        sub.add_argument("--output", default=None,
                         help="write rendered output to this file")
    sub.add_argument("--strict", action="store_true",
                     help="reject duplicate citation batches instead of "
                          "summing them")
    sub.add_argument("--full-precision", dest="full_precision",
                     action="store_true",
                     help="emit shortest round-trip decimals instead of 4 "
                          "significant digits")
    sub.add_argument("--echo-tolerances", dest="echo_tolerances",
                     action="store_true",
                     help="print the fixed rendering/comparison tolerances "
                          "before the output")
    sub.add_argument("--server", default=None, metavar="URL",
                     help="send the operation to a running service instead "
                          "of computing in-process")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jifkit",
        description="Journal impact indicators: compute, rank, correlate, "
                    "validate, export scatter pairs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser(
        "compute", help="compute an indicator table from a dataset")
    _add_common(compute, table_input=False)

    correlate = commands.add_parser(
        "correlate", help="Pearson correlation matrix between indicators")
    _add_common(correlate, table_input=True)
    correlate.add_argument("--use", choices=("values", "ranks"),
                           default="values",
                           help="correlate raw values or rank positions")

    rank = commands.add_parser(
        "rank", help="per-indicator rank listings (ties reported)")
    _add_common(rank, table_input=True)

    validate = commands.add_parser(
        "validate", help="consistency report for a dataset")
    _add_common(validate, table_input=False)
    validate.add_argument("--required", default=None,
                          help="comma-separated impact-factor fields or "
                               "indicator names whose inputs must be present")

    scatter = commands.add_parser(
        "scatter", help="export an (x, y) indicator point series")
    _add_common(scatter, table_input=True, formats=False)
    scatter.add_argument("--x", required=True, help="x-axis indicator")
    scatter.add_argument("--y", required=True, help="y-axis indicator")
    scatter.add_argument("--svg", action="store_true",
                         help="also write an SVG scatter plot")
    scatter.add_argument("--output-dir", dest="output_dir", default=None,
                         help=f"output directory (default: ${OUTPUT_DIR_ENV} "
                              "or the working directory)")

    serve = commands.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        if args.command == "serve":
            return cmd_serve(args.host, args.port)
        cfg = _config(args)
        if args.command == "compute":
            return cmd_compute(cfg)
        if args.command == "correlate":
            return cmd_correlate(cfg, args.use)
        if args.command == "rank":
            return cmd_rank(cfg)
        if args.command == "validate":
            return cmd_validate(cfg, args.required)
        return cmd_scatter(cfg, args.x, args.y, svg=args.svg,
                           output_dir=args.output_dir)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        first = exc.errors()[0].get("msg", str(exc))
        print(f"error: {first}", file=sys.stderr)
        return EXIT_USAGE
    except ServiceError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
