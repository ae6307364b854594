"""Subcommand handlers. Each returns the process exit status."""

import argparse
import logging
from typing import Awaitable, Callable, Dict, Optional

from src.core.complex import PolyhedralComplex, validate_complex
from src.core.errors import InputError, ValidationError
from src.core.presentation import extract_presentation
from src.covers.enumeration import enumerate_reps
from src.covers.search import search_cover_killing_diagonals
from src.diagonals.diagonals import enumerate_diagonals
from src.pipeline.config import PipelineConfig
from src.pipeline.orchestrator import describe, virtualize
from src.pipeline.report import PipelineStatus
from src.pulling.ordering import order_vertices, parse_order_spec
from src.pulling.triangulation import subdivide_complex
from src.pulling.verification import verify_triangulation
from src.utils.file_processor import FileProcessor
from src.utils.schema import complex_to_document, dumps

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_EXHAUSTED = 2
EXIT_INPUT = 3

Handler = Callable[[argparse.Namespace, Dict[str, object]], Awaitable[int]]

# Handlers keyed by subcommand path, e.g. "covers search"
handlers: Dict[str, Handler] = {}


def command(name: str):
    def register(func: Handler) -> Handler:
        handlers[name] = func
        return func
    return register


def emit(args: argparse.Namespace, payload: Dict, text: str) -> None:
    print(dumps(payload) if args.json else text, end="")


async def load_valid_complex(path: str) -> PolyhedralComplex:
    complex = await FileProcessor.load_complex(path)
    report = validate_complex(complex)
    if not report.clean:
        raise ValidationError(f"{path} is not a valid complex: {len(report.issues)} issue(s)", report)
    return complex


async def resolve_order(spec: str) -> str:
    if spec.startswith("file:"):
        return ",".join(str(c) for c in await FileProcessor.read_ordering(spec[len("file:"):]))
    return spec


@command("validate")
async def validate_command(args, overrides) -> int:
    complex = await FileProcessor.load_complex(args.complex)
    report = validate_complex(complex)
    payload = report.to_dict()
    lines = [f"{args.complex}: {report.status}"]
    lines.extend(f"  {issue}" for issue in report.issues)
    if report.clean:
        summary = describe(complex)
        payload["summary"] = summary
        lines.append(f"  {summary['polyhedra']} polyhedra, {summary['vertex_classes']} vertex classes, "
                     f"euler characteristic {summary['euler_characteristic']}")
    emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK if report.clean else EXIT_INPUT


@command("diagonals")
async def diagonals_command(args, overrides) -> int:
    complex = await load_valid_complex(args.complex)
    diagonals = enumerate_diagonals(complex, with_witnesses=not args.no_witnesses)
    lines = [f"{len(diagonals)} diagonals, {len(diagonals.returning)} returning"]
    for d in diagonals:
        record = d.to_dict()
        status = f"returning via {record['witness']}" if "witness" in record else (
            "returning" if d.returning else "non-returning")
        lines.append(f"  P{d.polyhedron} ({d.v}, {d.w}): {status}")
    emit(args, diagonals.to_dict(), "\n".join(lines) + "\n")
    return EXIT_OK


@command("covers enumerate")
async def covers_enumerate_command(args, overrides) -> int:
    complex = await load_valid_complex(args.complex)
    presentation = extract_presentation(complex)
    reps = list(enumerate_reps(presentation, args.degree, args.limit))
    payload = {"degree": args.degree, "count": len(reps), "reps": [rep.to_dict() for rep in reps]}
    lines = [f"{len(reps)} transitive rep(s) of degree {args.degree}"]
    lines.extend(f"  {rep}" for rep in reps)
    emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


@command("covers search")
async def covers_search_command(args, overrides) -> int:
    complex = await load_valid_complex(args.complex)
    config = _pipeline_config(args, overrides)
    outcome = search_cover_killing_diagonals(
        complex, max_degree=config.max_degree, cap=config.cap, per_diagonal=config.per_diagonal,
        resume=config.resume, max_reps=config.max_reps, samples=config.samples, seed=config.seed,
    )
    payload = outcome.to_dict()
    if outcome.found:
        text = f"found regular cover of degree {outcome.rep.degree}\n  {outcome.rep}\n"
        if args.output:
            await FileProcessor.save_document(complex_to_document(outcome.cover.total), args.output)
    else:
        text = f"exhausted ({outcome.reason}) after degrees {outcome.degrees_tried}\n"
        if outcome.checkpoint:
            text += f"  resume with: {outcome.checkpoint}\n"
    emit(args, payload, text)
    return EXIT_OK if outcome.found else EXIT_EXHAUSTED


@command("pull")
async def pull_command(args, overrides) -> int:
    complex = await load_valid_complex(args.complex)
    order = parse_order_spec(await resolve_order(args.order), len(complex.vertex_partition))
    ordering = order_vertices(complex, order)
    triangulation = subdivide_complex(complex, ordering)
    certificate = verify_triangulation(triangulation, complex)
    triangulation.certificate = certificate
    if args.output:
        await FileProcessor.save_document(triangulation.to_document(), args.output)
    payload = {"triangulation": triangulation.summary(), "certificate": certificate.to_dict()}
    emit(args, payload, _certificate_text(triangulation.summary()["simplices"], certificate))
    return EXIT_OK if certificate.passed else EXIT_VERIFICATION


@command("virtualize")
async def virtualize_command(args, overrides) -> int:
    complex = await FileProcessor.load_complex(args.complex)
    config = _pipeline_config(args, overrides, order=await resolve_order(args.order))
    report, triangulation = await virtualize(complex, config)
    if triangulation is not None and args.output:
        await FileProcessor.save_document(triangulation.to_document(), args.output)
    if args.report:
        await FileProcessor.save_document(report.to_dict(), args.report)
    emit(args, report.to_dict(timings=False), report.to_text())
    return EXIT_EXHAUSTED if report.status == PipelineStatus.EXHAUSTED else EXIT_OK


@command("verify")
async def verify_command(args, overrides) -> int:
    triangulation = await FileProcessor.load_triangulation(args.triangulation)
    complex = await FileProcessor.load_complex(args.against)
    certificate = verify_triangulation(triangulation, complex)
    emit(args, certificate.to_dict(), _certificate_text(len(triangulation.complex.polyhedra), certificate))
    return EXIT_OK if certificate.passed else EXIT_VERIFICATION


def _pipeline_config(args, overrides, order: Optional[str] = None) -> PipelineConfig:
    mode = args.mode
    if args.per_diagonal:
        if mode == "direct":
            raise InputError("--per-diagonal contradicts --mode direct")
        mode = "per-diagonal"
    return PipelineConfig.from_settings(
        overrides,
        max_degree=args.max_degree,
        cap=args.cap,
        mode=mode,
        resume=args.resume,
        max_reps=args.max_reps,
        order=order,
    )


def _certificate_text(simplices: int, certificate) -> str:
    lines = [f"{simplices} simplices, certificate {'passed' if certificate.passed else 'FAILED'}"]
    lines.extend(f"  - {reason}" for reason in certificate.failures)
    return "\n".join(lines) + "\n"
