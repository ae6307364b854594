"""Geometric realization of subdivisions and exact volume bookkeeping."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from sympy import Rational

from src.core.errors import VerificationError

from .exact import Point, centroid, signed_volume
from .fellow import EuclideanFellow, require_valid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeometricSimplex:
    vertices: Tuple[int, ...]
    points: Tuple[Point, ...]
    signed_volume: Rational

    @property
    def volume(self) -> Rational:
        return abs(self.signed_volume)

    @property
    def degenerate(self) -> bool:
        return self.signed_volume == 0


@dataclass
class VolumeLedger:
    simplices: List[GeometricSimplex] = field(default_factory=list)
    total: Rational = Rational(0)
    oracle: Rational = Rational(0)

    @property
    def balanced(self) -> bool:
        return self.total == self.oracle

    def to_dict(self) -> Dict:
        return {
            "simplices": [
                {"vertices": list(s.vertices), "signed_volume": str(s.signed_volume)} for s in self.simplices
            ],
            "total": str(self.total),
            "oracle": str(self.oracle),
            "balanced": self.balanced,
        }


def fellow_volume(f: EuclideanFellow) -> Rational:
    """Volume of a convex fellow from its barycentric flag decomposition.

    Each full flag of faces contributes the simplex on the face centroids,
    which is independent of any chosen triangulation.
    """
    lattice = f.lattice
    centroids = {face: centroid(f.points(face)) for rank in lattice.faces for face in rank}
    total = Rational(0)
    stack = [(lattice.top, [centroids[lattice.top]])]
    while stack:
        face, chain = stack.pop()
        if len(face) == 1:
            total += abs(signed_volume(chain))
            continue
        for sub in lattice.subfaces(face):
            stack.append((sub, chain + [centroids[sub]]))
    return total


def folded_facets(simplices: Sequence[GeometricSimplex]) -> List[str]:
    """Shared facets whose two simplices lie on the same side of it.

    A facet is compared in sorted vertex order, so the sign of each side
    does not depend on how the simplices list their vertices.
    """
    sides: Dict[Tuple[int, ...], List[Tuple[int, Rational]]] = {}
    for k, simplex in enumerate(simplices):
        if simplex.degenerate:
            continue
        lookup = dict(zip(simplex.vertices, simplex.points))
        for opposite in simplex.vertices:
            facet = tuple(sorted(v for v in simplex.vertices if v != opposite))
            side = signed_volume([lookup[v] for v in facet] + [lookup[opposite]])
            sides.setdefault(facet, []).append((k, side))

    problems = []
    for facet, entries in sides.items():
        if len(entries) > 2:
            problems.append(f"facet {list(facet)} is shared by {len(entries)} simplices")
        elif len(entries) == 2 and (entries[0][1] > 0) == (entries[1][1] > 0):
            first, second = (simplices[k].vertices for k, _ in entries)
            problems.append(f"simplices {list(first)} and {list(second)} fold over facet {list(facet)}")
    return problems


def realize_subdivision(f: EuclideanFellow,
                        simplices: Sequence[Sequence[int]]) -> VolumeLedger:
    """Realize combinatorial simplices on the fellow's coordinates.

    Only convexity is required of the fellow. Every simplex must be
    nondegenerate, the absolute volumes must add up to the fellow's
    volume exactly, and simplices sharing a facet must lie on opposite
    sides of it.
    """
    require_valid(f, ("convex",))
    ledger = VolumeLedger(oracle=fellow_volume(f))
    degenerate = []
    for vertices in simplices:
        vertices = tuple(vertices)
        if len(vertices) != f.dim + 1:
            raise VerificationError(f"simplex {list(vertices)} has {len(vertices)} vertices",
                                    [f"expected {f.dim + 1} vertices"])
        points = tuple(f.coords[v] for v in vertices)
        simplex = GeometricSimplex(vertices, points, signed_volume(points))
        if simplex.degenerate:
            degenerate.append(f"simplex {list(vertices)} is degenerate")
        ledger.simplices.append(simplex)
        ledger.total += simplex.volume

    problems = list(degenerate)
    if not ledger.balanced:
        problems.append(f"simplex volumes sum to {ledger.total}, polytope volume is {ledger.oracle}")
    problems.extend(folded_facets(ledger.simplices))
    if problems:
        logger.error(f"Geometric realization failed: {problems}")
        raise VerificationError("subdivision does not realize the polytope", problems)
    logger.debug(f"Realized {len(ledger.simplices)} simplices, volume {ledger.total}")
    return ledger
