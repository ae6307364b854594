"""Euclidean fellows of partially truncated polyhedra in the projective ball model."""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Rational

from src.core.complex import Polyhedron, VertexTag
from src.core.errors import PreconditionError, ValidationError
from src.core.lattice import FaceLattice

from .exact import Point, affine_hyperplane, affine_rank, dot, minimum_norm_squared, norm_squared, rational_point

logger = logging.getLogger(__name__)

CONDITIONS = ("ideal", "hyperideal", "convex", "codim2")


@dataclass(frozen=True)
class EuclideanFellow:
    lattice: FaceLattice
    coords: Tuple[Point, ...]
    tags: Tuple[VertexTag, ...]
    facets: Tuple[Tuple[int, ...], ...] = ()

    @classmethod
    def from_polyhedron(cls, poly: Polyhedron) -> "EuclideanFellow":
        if poly.coords is None:
            raise PreconditionError(f"polyhedron {poly.label or '?'} has no coordinates")
        return cls(poly.lattice, tuple(rational_point(p) for p in poly.coords), poly.tags, poly.facets)

    @classmethod
    def build(cls, coords: Sequence[Sequence], tags: Sequence[VertexTag],
              facets: Sequence[Sequence[int]]) -> "EuclideanFellow":
        lattice = FaceLattice.from_facets(len(coords), facets)
        return cls(lattice, tuple(rational_point(p) for p in coords), tuple(tags),
                   tuple(tuple(f) for f in facets))

    @property
    def dim(self) -> int:
        return self.lattice.dim

    @property
    def facet_list(self) -> Tuple[Tuple[int, ...], ...]:
        return self.facets or tuple(tuple(sorted(f)) for f in self.lattice.facets)

    def points(self, face) -> List[Point]:
        return [self.coords[v] for v in sorted(face)]

    def hyperideal_vertices(self) -> List[int]:
        return [v for v, tag in enumerate(self.tags) if tag == VertexTag.HYPERIDEAL]


@dataclass
class FellowReport:
    """Violations per condition; a condition passes when its list is empty."""
    violations: Dict[str, List[str]] = field(default_factory=lambda: {c: [] for c in CONDITIONS})
    flags: List[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not any(self.violations.values())

    def passed(self, condition: str) -> bool:
        return not self.violations[condition]

    def to_dict(self) -> Dict:
        return {
            "clean": self.clean,
            "conditions": {c: {"passed": not v, "violations": list(v)} for c, v in self.violations.items()},
            "flags": list(self.flags),
        }


def validate_fellow(f: EuclideanFellow) -> FellowReport:
    """Check the ideal, hyperideal, convexity and codimension-2 conditions exactly."""
    report = FellowReport()
    for v, (point, tag) in enumerate(zip(f.coords, f.tags)):
        r = norm_squared(point)
        if tag == VertexTag.IDEAL and r != 1:
            report.violations["ideal"].append(f"ideal vertex {v} has |v|^2 = {r}, expected 1")
        if tag == VertexTag.HYPERIDEAL and r <= 1:
            report.violations["hyperideal"].append(f"hyperideal vertex {v} has |v|^2 = {r}, expected > 1")

    report.violations["convex"].extend(convexity_violations(f))

    # codimension-2 faces of dimension 0 are vertices, governed by the first two conditions
    if f.dim >= 3:
        for face in f.lattice.faces[f.dim - 2]:
            m = minimum_norm_squared(f.points(face))
            if m > 1:
                report.violations["codim2"].append(
                    f"face {sorted(face)} misses the closed ball: min |x|^2 = {m}"
                )

    for u, w in truncation_plane_conflicts(f):
        report.flags.append(f"truncation planes of vertices {u} and {w} meet inside the ball")

    if not report.clean:
        logger.info(f"Fellow validation failed: {sum(len(v) for v in report.violations.values())} violation(s)")
    return report


def convexity_violations(f: EuclideanFellow) -> List[str]:
    problems = []
    if any(len(p) != f.dim for p in f.coords):
        return [f"coordinates must have {f.dim} components"]
    if affine_rank(f.coords) != f.dim:
        return ["vertices do not span the ambient space"]
    for i, facet in enumerate(f.facet_list):
        plane = affine_hyperplane(f.points(facet))
        if plane is None:
            problems.append(f"facet {i} is not flat or does not span a hyperplane")
            continue
        normal, offset = plane
        signs = set()
        for v, point in enumerate(f.coords):
            if v in facet:
                continue
            value = dot(normal, point) + offset
            if value == 0:
                problems.append(f"vertex {v} lies on the hyperplane of facet {i} but not in the facet")
            else:
                signs.add(value > 0)
        if len(signs) > 1:
            problems.append(f"facet {i} is not supporting: vertices lie on both sides")
    return problems


def require_valid(f: EuclideanFellow, conditions: Sequence[str] = CONDITIONS) -> FellowReport:
    report = validate_fellow(f)
    failed = [c for c in conditions if not report.passed(c)]
    if failed:
        raise ValidationError(f"fellow fails condition(s): {', '.join(failed)}", report)
    return report


@dataclass(frozen=True)
class TruncationPlane:
    """The polar hyperplane {x : <x, pole> = 1} of a hyperideal vertex."""
    pole: Point

    def value(self, x: Sequence) -> Rational:
        return dot(x, self.pole) - 1

    def contains(self, x: Sequence) -> bool:
        return self.value(x) == 0

    def separates_origin_from_pole(self) -> bool:
        return self.value([0] * len(self.pole)) < 0 < self.value(self.pole)

    @staticmethod
    def tangency_residual(x: Sequence, v: Sequence) -> Rational:
        """<x - v, x>: zero exactly when the chord from v to the sphere point
        x is tangent at x."""
        return dot([Rational(a) - Rational(b) for a, b in zip(x, v)], x)

    def __str__(self) -> str:
        terms = " + ".join(f"{c}*x{i + 1}" for i, c in enumerate(self.pole) if c != 0)
        return f"{terms} = 1"


def truncation_plane(v: Sequence) -> TruncationPlane:
    pole = rational_point(v)
    if norm_squared(pole) <= 1:
        raise PreconditionError(f"not hyperideal: |v|^2 = {norm_squared(pole)} <= 1")
    return TruncationPlane(pole)


@dataclass
class OrthogonalityEntry:
    vertex: int
    facet: int
    residual: Optional[Rational]
    degenerate: bool = False


@dataclass
class OrthogonalityReport:
    entries: List[OrthogonalityEntry] = field(default_factory=list)

    @property
    def degenerate(self) -> List[OrthogonalityEntry]:
        return [e for e in self.entries if e.degenerate]

    @property
    def passed(self) -> bool:
        return all(not e.degenerate and e.residual == 0 for e in self.entries)

    def to_dict(self) -> Dict:
        return {
            "passed": self.passed,
            "checked": [
                {"vertex": e.vertex, "facet": e.facet,
                 "residual": None if e.residual is None else str(e.residual), "degenerate": e.degenerate}
                for e in self.entries
            ],
        }


def check_orthogonality(f: EuclideanFellow) -> OrthogonalityReport:
    """Residual <v, a> - 1 for each hyperideal vertex v and each facet through
    v with supporting hyperplane {x : <x, a> = 1}."""
    require_valid(f)
    report = OrthogonalityReport()
    for v in f.hyperideal_vertices():
        for i, facet in enumerate(f.facet_list):
            if v not in facet:
                continue
            normal, offset = affine_hyperplane(f.points(facet))
            if offset == 0:
                logger.warning(f"Facet {i} through hyperideal vertex {v} passes through the origin")
                report.entries.append(OrthogonalityEntry(v, i, None, degenerate=True))
                continue
            pole = tuple(-c / offset for c in normal)
            report.entries.append(OrthogonalityEntry(v, i, dot(f.coords[v], pole) - 1))
    return report


@dataclass
class TruncationFace:
    """Truncation face at a hyperideal vertex, kept as exact incidence data:
    the plane, the lateral facets through the vertex, and where each edge at
    the vertex crosses the plane."""
    vertex: int
    plane: TruncationPlane
    lateral_facets: List[int]
    edge_points: Dict[int, Point]


def truncation_face(f: EuclideanFellow, v: int) -> TruncationFace:
    if f.tags[v] != VertexTag.HYPERIDEAL:
        raise PreconditionError(f"vertex {v} is not hyperideal")
    plane = truncation_plane(f.coords[v])
    pole = plane.pole
    r = norm_squared(pole)
    points = {}
    for edge in f.lattice.faces[1]:
        if v not in edge:
            continue
        (w,) = edge - {v}
        denominator = r - dot(f.coords[w], pole)
        if denominator <= 0:
            continue
        t = (r - 1) / denominator
        if 0 < t <= 1:
            points[w] = tuple(a + t * (b - a) for a, b in zip(pole, f.coords[w]))
    lateral = [i for i, facet in enumerate(f.facet_list) if v in facet]
    return TruncationFace(v, plane, lateral, points)


def truncation_plane_conflicts(f: EuclideanFellow) -> List[Tuple[int, int]]:
    """Pairs of hyperideal vertices whose truncation planes meet inside the
    open ball.

    The point of smallest norm on both planes is a*u + b*w with
    Gram(u, w) (a, b) = (1, 1), and its squared norm is a + b.
    """
    conflicts = []
    for u, w in combinations(f.hyperideal_vertices(), 2):
        pu, pw = f.coords[u], f.coords[w]
        gram = Matrix([[dot(pu, pu), dot(pu, pw)], [dot(pu, pw), dot(pw, pw)]])
        if gram.det() == 0:
            continue
        a, b = gram.LUsolve(Matrix([1, 1]))
        if Rational(a + b) < 1:
            logger.warning(f"Truncation planes of vertices {u} and {w} intersect inside the ball")
            conflicts.append((u, w))
    return conflicts
