"""Independent re-verification of triangulations."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from src.core.complex import PolyhedralComplex
from src.core.errors import ComplexError
from src.geometry.fellow import EuclideanFellow
from src.geometry.volume import realize_subdivision

from .cells import simplex_cell
from .subdivision import audit_stage
from .triangulation import Triangulation

logger = logging.getLogger(__name__)

CHECKS = ("simplices", "distinct_classes", "pairings", "tiling", "volume")


@dataclass
class Certificate:
    checks: Dict[str, Optional[bool]] = field(default_factory=lambda: {c: True for c in CHECKS})
    failures: List[str] = field(default_factory=list)
    volumes: Dict[int, Dict] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, check: str, reason: str) -> None:
        self.checks[check] = False
        self.failures.append(f"{check}: {reason}")

    def to_dict(self) -> Dict:
        return {
            "passed": self.passed,
            "checks": dict(self.checks),
            "failures": list(self.failures),
            "volumes": {str(p): v for p, v in sorted(self.volumes.items())},
        }


def verify_triangulation(t: Triangulation, complex: PolyhedralComplex) -> Certificate:
    """Re-check a triangulation against the complex it claims to subdivide.

    Nothing from the construction is reused: vertex classes come from the
    base complex, tiling is audited per source polyhedron from the simplices
    alone, and volumes are recomputed when coordinates exist.
    """
    cert = Certificate()
    if t.base_fingerprint != complex.fingerprint:
        cert.fail("simplices", "triangulation was built from a different complex")
        return cert

    partition = complex.vertex_partition
    dim = complex.dim
    by_source: Dict[int, List[tuple]] = {}
    seen: Dict[frozenset, int] = {}
    valid = set()

    for s, poly in enumerate(t.complex.polyhedra):
        prov = poly.provenance
        if prov is None or not 0 <= prov.polyhedron < len(complex.polyhedra):
            cert.fail("simplices", f"simplex {s} has no valid provenance")
            continue
        source = complex.polyhedra[prov.polyhedron]
        if len(prov.vertices) != dim + 1 or poly.num_vertices != dim + 1:
            cert.fail("simplices", f"simplex {s} has {len(prov.vertices)} vertices, expected {dim + 1}")
            continue
        if any(not 0 <= v < source.num_vertices for v in prov.vertices):
            cert.fail("simplices", f"simplex {s} names a vertex outside polyhedron {prov.polyhedron}")
            continue
        classes = [partition.class_of((prov.polyhedron, v)) for v in prov.vertices]
        if len(set(classes)) != len(classes):
            cert.fail("distinct_classes", f"simplex {s} has repeated vertex classes {classes}")
        key = frozenset((prov.polyhedron, v) for v in prov.vertices)
        if key in seen:
            cert.fail("simplices", f"simplices {seen[key]} and {s} share all {dim + 1} vertices")
        seen.setdefault(key, s)
        by_source.setdefault(prov.polyhedron, []).append(prov.vertices)
        valid.add(s)

    _check_pairings(t, complex, cert, valid)

    for p, poly in enumerate(complex.polyhedra):
        cells = [simplex_cell(vertices) for vertices in by_source.get(p, [])]
        if not cells:
            cert.fail("tiling", f"polyhedron {p} has no simplices")
            continue
        for problem in audit_stage(cells, poly.lattice):
            cert.fail("tiling", f"polyhedron {p}: {problem}")

    if all(poly.coords is not None for poly in complex.polyhedra):
        for p, poly in enumerate(complex.polyhedra):
            try:
                ledger = realize_subdivision(EuclideanFellow.from_polyhedron(poly), by_source.get(p, []))
                cert.volumes[p] = ledger.to_dict()
            except ComplexError as e:
                reasons = getattr(e, "reasons", None) or [str(e)]
                for reason in reasons:
                    cert.fail("volume", f"polyhedron {p}: {reason}")
    else:
        cert.checks["volume"] = None

    if cert.passed:
        logger.info(f"Triangulation verified: {len(t.complex.polyhedra)} simplices")
    else:
        logger.warning(f"Triangulation failed verification: {len(cert.failures)} problem(s)")
    return cert


def _check_pairings(t: Triangulation, complex: PolyhedralComplex, cert: Certificate, valid: set) -> None:
    partition = complex.vertex_partition
    used = set()
    simplices = t.complex.polyhedra
    for k, pairing in enumerate(t.pairings, start=1):
        ends = (pairing.source, pairing.target)
        if any(not 0 <= s < len(simplices) or not 0 <= i < simplices[s].num_vertices for s, i in ends):
            cert.fail("pairings", f"pairing {k} names a missing simplex facet")
            continue
        for end in ends:
            if end in used:
                cert.fail("pairings", f"simplex facet {end} is paired twice")
            used.add(end)
        (s, i), (u, j) = ends
        if s not in valid or u not in valid:
            continue
        src, dst = simplices[s].provenance, simplices[u].provenance
        expected_domain = set(range(len(src.vertices))) - {i}
        expected_range = set(range(len(dst.vertices))) - {j}
        if set(pairing.forward) != expected_domain or set(pairing.forward.values()) != expected_range:
            cert.fail("pairings", f"pairing {k} is not a bijection between facet vertex tuples")
            continue
        base = {src.vertices[a]: dst.vertices[b] for a, b in pairing.forward.items()}
        if any(partition.class_of((src.polyhedron, a)) != partition.class_of((dst.polyhedron, b))
               for a, b in base.items()):
            cert.fail("pairings", f"pairing {k} does not preserve vertex classes")
            continue
        if not _induced_by_base(complex, src.polyhedron, dst.polyhedron, base):
            cert.fail("pairings", f"pairing {k} is neither interior nor induced by a pairing of the complex")

    free = set(complex.unpaired_facets)
    for s, poly in enumerate(simplices):
        if s not in valid:
            continue
        prov = poly.provenance
        for i in range(poly.num_vertices):
            if (s, i) in used:
                continue
            face = frozenset(prov.vertices[:i] + prov.vertices[i + 1:])
            source = complex.polyhedra[prov.polyhedron]
            if not any((prov.polyhedron, f) in free and face <= source.facet(f)
                       for f in range(len(source.facets))):
                cert.fail("pairings", f"facet {i} of simplex {s} is unpaired")


def _induced_by_base(complex: PolyhedralComplex, p: int, q: int, mapping: Dict[int, int]) -> bool:
    face = frozenset(mapping)
    source = complex.polyhedra[p]
    if p == q and all(a == b for a, b in mapping.items()):
        if not any(face <= source.facet(f) for f in range(len(source.facets))):
            return True
    for f in source.facets_containing(face):
        crossing = complex.crossing(p, f)
        if crossing is None or crossing.polyhedron != q:
            continue
        if all(crossing.vertex_map[a] == b for a, b in mapping.items()):
            return True
    return False
