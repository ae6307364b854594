"""Triangulations of complexes by pulling, and their "vtc-1" form."""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from src.core.complex import FacetPairing, Polyhedron, PolyhedralComplex, Provenance, VertexTag
from src.core.errors import InputError, VerificationError
from src.utils.schema import ComplexDocument, complex_from_document, complex_to_document

from .ordering import VertexOrdering
from .subdivision import cone_subdivide

logger = logging.getLogger(__name__)

SimplexFacet = Tuple[int, int]


@dataclass
class Triangulation:
    """Simplices of a pulled complex, stored as a complex of simplices.

    Simplex ``i`` is ``complex.polyhedra[i]``; its provenance names the
    source polyhedron and the source-local vertices in pulling order.
    Facet ``j`` of a simplex is the one opposite its vertex ``j``.
    """
    complex: PolyhedralComplex
    base_fingerprint: str
    ordering: Tuple[int, ...]
    certificate: Optional[Any] = None

    @property
    def dim(self) -> int:
        return self.complex.dim

    @property
    def simplices(self) -> List[Provenance]:
        return [poly.provenance for poly in self.complex.polyhedra]

    @property
    def pairings(self) -> Tuple[FacetPairing, ...]:
        return self.complex.pairings

    def ideal_histogram(self) -> Dict[int, int]:
        """Number of simplices by their count of ideal vertices."""
        counts = Counter(
            sum(1 for tag in poly.tags if tag == VertexTag.IDEAL) for poly in self.complex.polyhedra
        )
        return {k: counts[k] for k in sorted(counts)}

    def summary(self) -> Dict:
        return {
            "simplices": len(self.complex.polyhedra),
            "pairings": len(self.complex.pairings),
            "ideal_vertex_histogram": {str(k): v for k, v in self.ideal_histogram().items()},
            "at_most_one_ideal_vertex": all(k <= 1 for k in self.ideal_histogram()),
        }

    def to_document(self) -> Dict[str, Any]:
        return complex_to_document(
            self.complex,
            base_fingerprint=self.base_fingerprint,
            ordering=list(self.ordering),
            certificate=self.certificate.to_dict() if self.certificate is not None else None,
        )

    @classmethod
    def from_document(cls, doc: ComplexDocument) -> "Triangulation":
        if doc.base_fingerprint is None or doc.ordering is None:
            raise InputError("Triangulation file needs base_fingerprint and ordering")
        missing = [i for i, p in enumerate(doc.polyhedra) if p.provenance is None]
        if missing:
            raise InputError(f"Triangulation simplices {missing} have no provenance")
        return cls(complex_from_document(doc), doc.base_fingerprint, tuple(doc.ordering))


def _simplex_polyhedron(source: Polyhedron, p: int, index: int, vertices: Tuple[int, ...]) -> Polyhedron:
    n = len(vertices)
    return Polyhedron(
        dim=n - 1,
        facets=tuple(tuple(j for j in range(n) if j != i) for i in range(n)),
        tags=tuple(source.tags[v] for v in vertices),
        labels=tuple(source.vertex_label(v) for v in vertices),
        coords=tuple(source.coords[v] for v in vertices) if source.coords is not None else None,
        label=f"{source.label or p}.{index}",
        provenance=Provenance(p, vertices),
    )


def subdivide_complex(complex: PolyhedralComplex, ordering: VertexOrdering) -> Triangulation:
    """Pull every polyhedron with the global ordering restricted to it and
    induce simplicial facet pairings.

    Raises VerificationError naming the pairing whose two facets were
    subdivided differently.
    """
    partition = complex.vertex_partition
    if len(ordering) != len(partition):
        raise InputError(f"ordering covers {len(ordering)} classes, complex has {len(partition)}")

    simplices: List[Polyhedron] = []
    # (polyhedron, frozenset of source-local facet vertices) -> (simplex, facet)
    facet_owner: Dict[Tuple[int, frozenset], List[SimplexFacet]] = {}
    pairings: List[FacetPairing] = []

    for p, poly in enumerate(complex.polyhedra):
        keys = [ordering.position(partition.class_of((p, v))) for v in range(poly.num_vertices)]
        owners: Dict[frozenset, List[SimplexFacet]] = {}
        for index, vertices in enumerate(cone_subdivide(poly, keys)):
            s = len(simplices)
            simplices.append(_simplex_polyhedron(poly, p, index, vertices))
            for j in range(len(vertices)):
                owners.setdefault(frozenset(vertices[:j] + vertices[j + 1:]), []).append((s, j))

        boundary = [frozenset(f) for f in poly.facets]
        for face in sorted(owners, key=sorted):
            facet_owner[(p, face)] = owners[face]
            if not any(face <= b for b in boundary):
                (s, i), (t, j) = owners[face]
                pairings.append(_glue(simplices, (s, i), (t, j), identity=True))

    for k, pairing in enumerate(complex.pairings, start=1):
        (p, f), (q, g) = pairing.source, pairing.target
        source_faces = _faces_in(facet_owner, p, complex.polyhedra[p].facet(f))
        target_faces = _faces_in(facet_owner, q, complex.polyhedra[q].facet(g))
        mapped = {frozenset(pairing.forward[v] for v in face): face for face in source_faces}
        if set(mapped) != set(target_faces):
            logger.error(f"Facet subdivisions disagree across pairing {k}: {pairing.source} -> {pairing.target}")
            raise VerificationError(
                f"pairing {k} does not carry the subdivision of facet {pairing.source} onto {pairing.target}",
                [f"pairing {k}: {len(source_faces)} source cell(s), {len(target_faces)} target cell(s)"],
            )
        for image in sorted(target_faces, key=sorted):
            face = mapped[image]
            (s, i), = facet_owner[(p, face)]
            (t, j), = facet_owner[(q, image)]
            pairings.append(_glue(simplices, (s, i), (t, j), forward=pairing.forward))

    total = PolyhedralComplex(complex.dim, simplices, pairings, free_boundary=complex.free_boundary,
                              label=f"{complex.label or 'complex'} pulled")
    logger.info(f"Pulled {len(complex.polyhedra)} polyhedra into {len(simplices)} simplices")
    return Triangulation(total, complex.fingerprint, ordering.classes)


def _faces_in(facet_owner, p: int, facet: frozenset) -> List[frozenset]:
    return [face for (q, face) in facet_owner if q == p and face <= facet]


def _glue(simplices: List[Polyhedron], a: SimplexFacet, b: SimplexFacet, identity: bool = False,
          forward: Optional[Dict[int, int]] = None) -> FacetPairing:
    (s, i), (t, j) = a, b
    src = simplices[s].provenance.vertices
    dst = simplices[t].provenance.vertices
    where = {v: x for x, v in enumerate(dst)}
    vertex_map = []
    for x, v in enumerate(src):
        if x == i:
            continue
        image = v if identity else forward[v]
        vertex_map.append((x, where[image]))
    return FacetPairing((s, i), (t, j), tuple(vertex_map))
