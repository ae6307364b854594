"""Finite covers of a complex built from permutation representations."""

import dataclasses
import logging
from dataclasses import dataclass
from typing import List, Tuple

from src.core.complex import FacetPairing, PolyhedralComplex
from src.core.errors import PreconditionError, VerificationError
from src.core.presentation import extract_presentation, spell

from .permutation_rep import PermutationRep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverComplex:
    """``total`` holds ``degree`` copies of each base polyhedron.

    Copy ``i`` of base polyhedron ``P`` is total polyhedron
    ``i * n + P`` with ``n`` base polyhedra; copy 0 is the distinguished lift.
    """
    base: PolyhedralComplex
    rep: PermutationRep
    total: PolyhedralComplex

    @property
    def degree(self) -> int:
        return self.rep.degree

    @property
    def base_count(self) -> int:
        return len(self.base.polyhedra)

    def project(self, polyhedron: int) -> int:
        return polyhedron % self.base_count

    def copy_of(self, polyhedron: int) -> int:
        return polyhedron // self.base_count

    def lift(self, polyhedron: int, copy: int) -> int:
        return copy * self.base_count + polyhedron

    def fiber(self, polyhedron: int) -> List[int]:
        return [self.lift(polyhedron, i) for i in range(self.degree)]

    def project_pairing(self, index: int) -> Tuple[int, int]:
        """Base generator and copy index of cover pairing ``index`` (0-based)."""
        return index // self.degree + 1, index % self.degree


def build_cover(complex: PolyhedralComplex, rep: PermutationRep) -> CoverComplex:
    """Lift every pairing g to gluings copy i -> copy i.g with the same vertex map."""
    presentation = extract_presentation(complex)
    if rep.num_generators != presentation.num_generators:
        raise PreconditionError(
            f"rep has {rep.num_generators} generators, presentation has {presentation.num_generators}"
        )
    failing = rep.failing_relators(presentation)
    if failing:
        raise VerificationError(
            "representation does not satisfy the presentation",
            [f"relator {spell(r)} is not trivial" for r in failing],
        )
    if not rep.is_transitive:
        raise PreconditionError("build_cover needs a transitive representation")

    n = len(complex.polyhedra)
    polyhedra = []
    for i in range(rep.degree):
        for poly in complex.polyhedra:
            label = f"{poly.label}#{i}" if rep.degree > 1 else poly.label
            polyhedra.append(dataclasses.replace(poly, label=label))

    pairings = []
    for k, pairing in enumerate(complex.pairings):
        (src, sf), (dst, df) = pairing.source, pairing.target
        for i in range(rep.degree):
            j = rep.images[k][i]
            pairings.append(FacetPairing((i * n + src, sf), (j * n + dst, df), pairing.vertex_map))

    name = f"{complex.label}-cover-{rep.degree}" if complex.label else f"cover-{rep.degree}"
    total = PolyhedralComplex(complex.dim, polyhedra, pairings, free_boundary=False, label=name)
    logger.info(f"Built degree-{rep.degree} cover with {len(polyhedra)} polyhedra")
    return CoverComplex(base=complex, rep=rep, total=total)


def kills_diagonal_in_some_lift(complex: PolyhedralComplex, rep: PermutationRep, diagonal) -> bool:
    """True if some lift of ``diagonal`` is non-returning in the cover of ``rep``.

    In any regular cover factoring through ``rep`` the whole orbit of the
    diagonal is then non-returning.
    """
    cover = build_cover(complex, rep)
    partition = cover.total.vertex_partition
    for copy in range(rep.degree):
        p = cover.lift(diagonal.polyhedron, copy)
        if partition.class_of((p, diagonal.v)) != partition.class_of((p, diagonal.w)):
            return True
    return False


def count_returning(complex: PolyhedralComplex) -> int:
    """Number of returning diagonals, without witnesses."""
    partition = complex.vertex_partition
    total = 0
    for p, poly in enumerate(complex.polyhedra):
        classes = [partition.class_of((p, v)) for v in range(poly.num_vertices)]
        for c in set(classes):
            k = classes.count(c)
            total += k * (k - 1) // 2
    return total
