"""Polyhedral complexes with facet pairings and their quotient structure."""

import hashlib
import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from sympy import Rational

from .lattice import Face, FaceLattice
from .union_find import UnionFind

logger = logging.getLogger(__name__)

VertexInstance = Tuple[int, int]
FacetRef = Tuple[int, int]


class VertexTag(Enum):
    IDEAL = "ideal"
    HYPERIDEAL = "hyperideal"


@dataclass(frozen=True)
class Provenance:
    """Where a simplex of a triangulation came from."""
    polyhedron: int
    vertices: Tuple[int, ...]


@dataclass(frozen=True)
class Polyhedron:
    """One cell of a complex.

    Facets keep their input order; facet ``i`` is ``facets[i]``. ``coords``
    holds exact rational coordinates of the Euclidean fellow when known.
    """
    dim: int
    facets: Tuple[Tuple[int, ...], ...]
    tags: Tuple[VertexTag, ...]
    labels: Tuple[str, ...] = ()
    coords: Optional[Tuple[Tuple[Rational, ...], ...]] = None
    label: str = ""
    provenance: Optional[Provenance] = None

    @property
    def num_vertices(self) -> int:
        return len(self.tags)

    @property
    def lattice(self) -> FaceLattice:
        return FaceLattice.from_facets(self.num_vertices, self.facets)

    def facet(self, index: int) -> Face:
        return frozenset(self.facets[index])

    def facets_containing(self, face: Face) -> List[int]:
        return [i for i, f in enumerate(self.facets) if face <= frozenset(f)]

    def vertex_label(self, v: int) -> str:
        return self.labels[v] if v < len(self.labels) else str(v)


@dataclass(frozen=True)
class FacetPairing:
    """Gluing of facet ``source`` onto facet ``target``.

    ``vertex_map`` lists (source vertex, target vertex) pairs. One
    orientation is stored per pair; the inverse is implied.
    """
    source: FacetRef
    target: FacetRef
    vertex_map: Tuple[Tuple[int, int], ...]
    _forward: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)
    _backward: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_forward", dict(self.vertex_map))
        object.__setattr__(self, "_backward", {b: a for a, b in self.vertex_map})

    @property
    def forward(self) -> Dict[int, int]:
        return self._forward

    @property
    def backward(self) -> Dict[int, int]:
        return self._backward

    def inverse(self) -> "FacetPairing":
        return FacetPairing(self.target, self.source, tuple(sorted((b, a) for a, b in self.vertex_map)))


@dataclass(frozen=True)
class Crossing:
    """Passing through a facet: the generator letter and where it lands."""
    letter: int
    polyhedron: int
    facet: int
    vertex_map: Dict[int, int] = field(compare=False, hash=False)


@dataclass(frozen=True)
class Partition:
    """Deterministically numbered equivalence classes."""
    classes: Tuple[Tuple[Hashable, ...], ...]
    index: Dict[Hashable, int] = field(repr=False, compare=False, hash=False)

    @classmethod
    def from_union_find(cls, uf: UnionFind) -> "Partition":
        classes = tuple(uf.classes())
        index = {member: i for i, members in enumerate(classes) for member in members}
        return cls(classes, index)

    def class_of(self, element: Hashable) -> int:
        return self.index[element]

    def __len__(self) -> int:
        return len(self.classes)


class PolyhedralComplex:
    """Disjoint polyhedra together with facet pairings.

    Treated as immutable after construction; derived data is cached.
    Generator ``k`` (1-based) is ``pairings[k - 1]``.
    """

    def __init__(self, dim: int, polyhedra: Sequence[Polyhedron], pairings: Sequence[FacetPairing],
                 free_boundary: bool = False, label: str = ""):
        self.dim = dim
        self.polyhedra: Tuple[Polyhedron, ...] = tuple(polyhedra)
        self.pairings: Tuple[FacetPairing, ...] = tuple(pairings)
        self.free_boundary = free_boundary
        self.label = label
        self._face_partitions: Dict[int, Partition] = {}
        self._derived: Dict[str, object] = {}

    def __repr__(self) -> str:
        return (f"PolyhedralComplex(dim={self.dim}, polyhedra={len(self.polyhedra)}, "
                f"pairings={len(self.pairings)}, free_boundary={self.free_boundary})")

    @cached_property
    def _crossings(self) -> Dict[FacetRef, Crossing]:
        crossings = {}
        for k, pairing in enumerate(self.pairings, start=1):
            crossings[pairing.source] = Crossing(k, pairing.target[0], pairing.target[1], pairing.forward)
            crossings[pairing.target] = Crossing(-k, pairing.source[0], pairing.source[1], pairing.backward)
        return crossings

    def crossing(self, polyhedron: int, facet: int) -> Optional[Crossing]:
        """How to leave ``polyhedron`` through ``facet``; None if unpaired."""
        return self._crossings.get((polyhedron, facet))

    @property
    def unpaired_facets(self) -> List[FacetRef]:
        return [
            (p, f)
            for p, poly in enumerate(self.polyhedra)
            for f in range(len(poly.facets))
            if (p, f) not in self._crossings
        ]

    @property
    def is_closed(self) -> bool:
        return not self.unpaired_facets

    def vertex_instances(self) -> List[VertexInstance]:
        return [(p, v) for p, poly in enumerate(self.polyhedra) for v in range(poly.num_vertices)]

    @cached_property
    def vertex_partition(self) -> Partition:
        uf = UnionFind(self.vertex_instances())
        for pairing in self.pairings:
            src, dst = pairing.source[0], pairing.target[0]
            for a, b in pairing.vertex_map:
                uf.union((src, a), (dst, b))
        return Partition.from_union_find(uf)

    def face_partition(self, rank: int) -> Partition:
        if rank not in self._face_partitions:
            self._face_partitions[rank] = self._compute_face_partition(rank)
        return self._face_partitions[rank]

    def _compute_face_partition(self, rank: int) -> Partition:
        uf = UnionFind(
            (p, tuple(sorted(face)))
            for p, poly in enumerate(self.polyhedra)
            for face in poly.lattice.faces[rank]
        )
        if rank < self.dim:
            for pairing in self.pairings:
                (src, sf), (dst, _) = pairing.source, pairing.target
                facet = self.polyhedra[src].facet(sf)
                for face in self.polyhedra[src].lattice.faces_within(facet, rank):
                    image = tuple(sorted(pairing.forward[v] for v in face))
                    uf.union((src, tuple(sorted(face))), (dst, image))
        return Partition.from_union_find(uf)

    @cached_property
    def link_characteristics(self) -> Tuple[int, ...]:
        """Euler characteristic of the link of each vertex class.

        Link cells are classes of (polyhedron, face, vertex) with the face of
        rank at least 1; such a cell has dimension rank - 1.
        """
        uf = UnionFind()
        ranks: Dict[Tuple, int] = {}
        for p, poly in enumerate(self.polyhedra):
            lattice = poly.lattice
            for rank in range(1, self.dim + 1):
                for face in lattice.faces[rank]:
                    key = tuple(sorted(face))
                    for v in key:
                        uf.add((p, key, v))
                        ranks[(p, key, v)] = rank
        for pairing in self.pairings:
            (src, sf), (dst, _) = pairing.source, pairing.target
            lattice = self.polyhedra[src].lattice
            facet = self.polyhedra[src].facet(sf)
            for rank in range(1, self.dim):
                for face in lattice.faces_within(facet, rank):
                    key = tuple(sorted(face))
                    image = tuple(sorted(pairing.forward[v] for v in key))
                    for v in key:
                        uf.union((src, key, v), (dst, image, pairing.forward[v]))

        totals = [0] * len(self.vertex_partition)
        for members in uf.classes():
            p, _, v = members[0]
            c = self.vertex_partition.class_of((p, v))
            totals[c] += (-1) ** (ranks[members[0]] - 1)
        return tuple(totals)

    @cached_property
    def fingerprint(self) -> str:
        payload = {
            "dim": self.dim,
            "free_boundary": self.free_boundary,
            "polyhedra": [
                {
                    "facets": [list(f) for f in poly.facets],
                    "tags": [t.value for t in poly.tags],
                    "coords": [[str(c) for c in point] for point in poly.coords] if poly.coords else None,
                }
                for poly in self.polyhedra
            ],
            "pairings": [
                [list(pr.source), list(pr.target), [list(m) for m in pr.vertex_map]]
                for pr in self.pairings
            ],
        }
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode("utf-8")).hexdigest()


@dataclass
class ValidationIssue:
    code: str
    message: str
    location: str

    def __str__(self) -> str:
        return f"{self.location}: {self.code}: {self.message}"


@dataclass
class ValidationReport:
    issues: List[ValidationIssue] = field(default_factory=list)
    unpaired: List[FacetRef] = field(default_factory=list)
    free_boundary: bool = False

    @property
    def clean(self) -> bool:
        return not self.issues

    @property
    def status(self) -> str:
        if self.issues:
            return "invalid"
        if self.unpaired:
            return "clean-with-free-boundary"
        return "clean"

    def add(self, code: str, message: str, location: str) -> None:
        self.issues.append(ValidationIssue(code, message, location))

    def to_dict(self) -> Dict:
        return {
            "status": self.status,
            "issues": [{"code": i.code, "message": i.message, "location": i.location} for i in self.issues],
            "unpaired": [list(ref) for ref in self.unpaired],
        }


def validate_complex(complex: PolyhedralComplex) -> ValidationReport:
    """Check every structural invariant, reporting violations with locations."""
    report = ValidationReport(free_boundary=complex.free_boundary)
    if complex.dim < 1:
        report.add("dimension", f"dimension must be at least 1, got {complex.dim}", "complex")
        return report

    sound = [_validate_polyhedron(p, poly, complex.dim, report) for p, poly in enumerate(complex.polyhedra)]

    used: Dict[FacetRef, int] = {}
    for k, pairing in enumerate(complex.pairings, start=1):
        location = f"pairing {k}"
        ends_ok = True
        for end in (pairing.source, pairing.target):
            p, f = end
            if not 0 <= p < len(complex.polyhedra):
                report.add("dangling-polyhedron", f"polyhedron {p} does not exist", location)
                ends_ok = False
            elif not 0 <= f < len(complex.polyhedra[p].facets):
                report.add("dangling-facet", f"polyhedron {p} has no facet {f}", location)
                ends_ok = False
            elif end in used and used[end] != k:
                report.add("facet-reused", f"facet {f} of polyhedron {p} already used by pairing {used[end]}",
                           location)
            else:
                used[end] = k
        if not ends_ok:
            continue
        if pairing.source == pairing.target:
            report.add("self-paired-facet", "a facet cannot be paired with itself", location)
            continue
        _validate_pairing(complex, pairing, location, report, sound)

    for p, poly in enumerate(complex.polyhedra):
        for f in range(len(poly.facets)):
            if (p, f) not in used:
                report.unpaired.append((p, f))
    if report.unpaired and not complex.free_boundary:
        for p, f in report.unpaired:
            report.add("unpaired-facet", "facet is not matched by any pairing", f"polyhedron {p} facet {f}")

    if report.issues:
        logger.info(f"Complex validation found {len(report.issues)} issue(s)")
    return report


def _validate_polyhedron(p: int, poly: Polyhedron, dim: int, report: ValidationReport) -> bool:
    location = f"polyhedron {p}"
    before = len(report.issues)
    if poly.dim != dim:
        report.add("dimension", f"polyhedron has dim {poly.dim}, complex has dim {dim}", location)
    if poly.num_vertices < dim + 1:
        report.add("too-few-vertices", f"{poly.num_vertices} vertices cannot span dimension {dim}", location)
    if poly.labels and len(poly.labels) != poly.num_vertices:
        report.add("labels", "label count differs from vertex count", location)
    for v, tag in enumerate(poly.tags):
        if not isinstance(tag, VertexTag):
            report.add("vertex-tag", f"vertex {v} has no ideal/hyperideal tag", location)
    if poly.coords is not None:
        if len(poly.coords) != poly.num_vertices:
            report.add("coords", "coordinate count differs from vertex count", location)
        for v, point in enumerate(poly.coords):
            if len(point) != dim:
                report.add("coords", f"vertex {v} has {len(point)} coordinates, expected {dim}", location)

    seen = set()
    for f, facet in enumerate(poly.facets):
        if not facet:
            report.add("empty-facet", f"facet {f} is empty", location)
        for v in facet:
            if not 0 <= v < poly.num_vertices:
                report.add("dangling-vertex", f"facet {f} refers to missing vertex {v}", location)
        if len(set(facet)) != len(facet):
            report.add("repeated-vertex", f"facet {f} repeats a vertex", location)
        key = frozenset(facet)
        if key in seen:
            report.add("duplicate-facet", f"facet {f} repeats an earlier facet", location)
        seen.add(key)
    if len(report.issues) > before:
        return False

    lattice = poly.lattice
    if lattice.dim != dim:
        report.add("lattice", f"facets generate a lattice of rank {lattice.dim}, expected {dim}", location)
        return False
    for problem in lattice.problems():
        report.add("lattice", problem, location)
    for f, facet in enumerate(poly.facets):
        if frozenset(facet) not in lattice.facets:
            report.add("lattice", f"facet {f} is not a maximal proper face", location)
    return len(report.issues) == before


def _validate_pairing(complex: PolyhedralComplex, pairing: FacetPairing, location: str,
                      report: ValidationReport, sound: List[bool]) -> None:
    (src, sf), (dst, df) = pairing.source, pairing.target
    source_facet = complex.polyhedra[src].facet(sf)
    target_facet = complex.polyhedra[dst].facet(df)
    domain = [a for a, _ in pairing.vertex_map]
    image = [b for _, b in pairing.vertex_map]

    if len(set(domain)) != len(domain) or len(set(image)) != len(image):
        report.add("non-bijective pairing", "two vertices share an image or a preimage", location)
        return
    if set(domain) != source_facet:
        report.add("non-bijective pairing", f"map domain {sorted(domain)} is not the source facet "
                   f"{sorted(source_facet)}", location)
        return
    if set(image) != target_facet:
        report.add("non-bijective pairing", f"map image {sorted(image)} is not the target facet "
                   f"{sorted(target_facet)}", location)
        return

    source_tags = complex.polyhedra[src].tags
    target_tags = complex.polyhedra[dst].tags
    for a, b in pairing.vertex_map:
        if source_tags[a] != target_tags[b]:
            report.add("tag-mismatch", f"vertex {a} ({source_tags[a].value}) maps to vertex {b} "
                       f"({target_tags[b].value})", location)

    if not (sound[src] and sound[dst]):
        return
    source_lattice = complex.polyhedra[src].lattice
    target_lattice = complex.polyhedra[dst].lattice
    for rank in range(complex.dim - 1):
        faces = source_lattice.faces_within(source_facet, rank)
        targets = target_lattice.faces_within(target_facet, rank)
        images = {frozenset(pairing.forward[v] for v in face) for face in faces}
        if images != set(targets):
            report.add("non-isomorphic pairing",
                       f"vertex map does not carry rank-{rank} faces onto rank-{rank} faces", location)
            return


def vertex_classes(complex: PolyhedralComplex) -> Partition:
    """Finest partition of vertex instances closed under all pairings."""
    return complex.vertex_partition


def face_classes(complex: PolyhedralComplex, rank: int) -> Partition:
    if not 0 <= rank <= complex.dim:
        raise ValueError(f"rank {rank} outside 0..{complex.dim}")
    return complex.face_partition(rank)


def pseudo_euler_characteristic(complex: PolyhedralComplex) -> int:
    """Alternating sum of face-class counts of the quotient pseudo-manifold."""
    return sum((-1) ** k * len(complex.face_partition(k)) for k in range(complex.dim + 1))


def link_euler_characteristic(complex: PolyhedralComplex, vertex_class: int) -> int:
    return complex.link_characteristics[vertex_class]


def euler_characteristic(complex: PolyhedralComplex) -> int:
    """Euler characteristic of the manifold left after removing vertex stars.

    Each vertex class with link L contributes 1 to the pseudo-manifold sum
    but only chi(L) once its open star is gone.
    """
    chi = pseudo_euler_characteristic(complex)
    return chi - sum(1 - link for link in complex.link_characteristics)


def fingerprint(complex: PolyhedralComplex) -> str:
    return complex.fingerprint
