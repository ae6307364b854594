"""End-to-end driver: validate, search a cover, lift, pull, verify."""

import asyncio
import logging
import time
from typing import Awaitable, Callable, Dict, Optional, Tuple

from src.core.complex import PolyhedralComplex, VertexTag, euler_characteristic, validate_complex
from src.core.errors import ComplexError, PreconditionError, ValidationError, VerificationError
from src.covers.search import search_cover_killing_diagonals
from src.diagonals.diagonals import enumerate_diagonals
from src.pulling.ordering import order_vertices, parse_order_spec
from src.pulling.triangulation import Triangulation, subdivide_complex
from src.pulling.verification import verify_triangulation

from .config import PipelineConfig
from .report import PipelineReport, PipelineStatus

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[str], Awaitable[None]]


def describe(complex: PolyhedralComplex) -> Dict:
    return {
        "name": complex.label,
        "fingerprint": complex.fingerprint,
        "dim": complex.dim,
        "polyhedra": len(complex.polyhedra),
        "pairings": len(complex.pairings),
        "free_boundary": complex.free_boundary,
        "vertex_classes": len(complex.vertex_partition),
        "euler_characteristic": euler_characteristic(complex),
        "at_most_one_ideal_vertex": all(
            sum(1 for tag in poly.tags if tag == VertexTag.IDEAL) <= 1 for poly in complex.polyhedra
        ),
    }


class _Stopwatch:
    def __init__(self):
        self.timings: Dict[str, float] = {}

    async def run(self, name: str, func, *args, **kwargs):
        start = time.perf_counter()
        try:
            return await asyncio.to_thread(func, *args, **kwargs)
        finally:
            self.timings[name] = time.perf_counter() - start


async def virtualize(complex: PolyhedralComplex, config: Optional[PipelineConfig] = None,
                     progress_callback: Optional[ProgressCallback] = None
                     ) -> Tuple[PipelineReport, Optional[Triangulation]]:
    """Triangulate ``complex`` after passing to a cover if it has returning
    diagonals.

    Returns the report and the verified triangulation of the cover, or the
    report and None when the cover search is exhausted.
    """
    config = config or PipelineConfig()
    clock = _Stopwatch()

    async def progress(message: str) -> None:
        logger.info(message)
        if progress_callback:
            await progress_callback(message)

    try:
        await progress("Validating complex...")
        validation = await clock.run("validate", validate_complex, complex)
        if not validation.clean:
            raise ValidationError(f"complex is invalid: {len(validation.issues)} issue(s)", validation)
        if complex.free_boundary or not complex.is_closed:
            raise PreconditionError("complex is not closed: the pipeline needs every facet paired")

        diagonals = await clock.run("diagonals", enumerate_diagonals, complex, False)
        await progress(f"{len(diagonals.returning)} of {len(diagonals)} diagonals are returning")
        report = PipelineReport(PipelineStatus.COMPLETED, describe(complex), diagonals.summary())

        target = complex
        if diagonals.returning:
            await progress(f"Searching covers up to degree {config.max_degree} ({config.mode})...")
            outcome = await clock.run(
                "search", search_cover_killing_diagonals, complex,
                max_degree=config.max_degree, cap=config.cap, per_diagonal=config.per_diagonal,
                resume=config.resume, max_reps=config.max_reps, samples=config.samples, seed=config.seed,
            )
            if not outcome.found:
                await progress(f"Cover search exhausted: {outcome.reason}")
                report.status = PipelineStatus.EXHAUSTED
                report.exhaustion = outcome.to_dict()
                report.timings = clock.timings
                return report, None
            target = outcome.cover.total
            report.cover = {
                **outcome.to_dict(),
                "vertex_classes": len(target.vertex_partition),
                "returning_after": len(outcome.diagonals.returning),
            }
            await progress(f"Found a regular cover of degree {outcome.rep.degree}")
        else:
            report.cover = {"degree": 1, "mode": "none"}

        seed_order = parse_order_spec(config.order, len(target.vertex_partition))
        ordering = order_vertices(target, seed_order)
        await progress(f"Pulling {len(target.polyhedra)} polyhedra...")
        triangulation = await clock.run("pull", subdivide_complex, target, ordering)

        await progress("Verifying triangulation...")
        certificate = await clock.run("verify", verify_triangulation, triangulation, target)
        triangulation.certificate = certificate
        report.triangulation = triangulation.summary()
        report.certificate = certificate.to_dict()
        report.timings = clock.timings
        if not certificate.passed:
            raise VerificationError("triangulation failed verification", certificate.failures)

        await progress(f"Triangulation verified: {len(triangulation.complex.polyhedra)} simplices")
        return report, triangulation

    except ComplexError as e:
        logger.error(f"Error in virtualize workflow: {e}")
        raise
    except Exception as e:
        logger.error(f"Unexpected error in virtualize workflow: {e}")
        raise ComplexError(f"Failed to virtualize {complex.label or 'complex'}: {str(e)}") from e
