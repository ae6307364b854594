"""Staged pulling subdivision of a single polytope."""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from src.core.complex import Polyhedron
from src.core.errors import PreconditionError, VerificationError
from src.core.lattice import FaceLattice

from .cells import Cell, from_lattice, pull

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubdivisionState:
    """Cells after pulling the first ``stage`` vertices of ``order``."""
    stage: int
    order: Tuple[int, ...]
    cells: Tuple[Cell, ...]

    @property
    def apexes(self) -> Tuple[int, ...]:
        return self.order[:self.stage]

    def interior_pairings(self) -> List[Tuple[int, int, Tuple[int, ...]]]:
        """Pairs of cells glued along a common facet, as (i, j, facet)."""
        owners: Dict[Tuple[int, ...], List[int]] = {}
        for i, cell in enumerate(self.cells):
            for f in cell.facets:
                owners.setdefault(f.key, []).append(i)
        return [(found[0], found[1], key) for key, found in sorted(owners.items()) if len(found) == 2]


def subdivision_stages(lattice: FaceLattice, order: Sequence[int]) -> Iterator[SubdivisionState]:
    """Yield the state before any pulling and after each vertex of ``order``."""
    order = tuple(order)
    cells: Tuple[Cell, ...] = (from_lattice(lattice),)
    yield SubdivisionState(0, order, cells)
    for j, apex in enumerate(order, start=1):
        cells = tuple(new for cell in cells for new in pull(cell, apex))
        yield SubdivisionState(j, order, cells)


def audit_stage(cells: Sequence[Cell], lattice: FaceLattice) -> List[str]:
    """Check that cells tile the polytope combinatorially.

    A codimension-one face of the cells lying in a facet of the polytope
    must belong to exactly one cell, any other to exactly two, and the
    complex of all faces must have Euler characteristic 1.
    """
    problems = []
    polytope_facets = lattice.facets
    counts: Counter = Counter()
    for cell in cells:
        if cell.dim != lattice.dim:
            problems.append(f"cell {list(cell.key)} has dimension {cell.dim}, expected {lattice.dim}")
        if len(set(cell.history)) != len(cell.history) or not set(cell.history) <= cell.vertices:
            problems.append(f"cell {list(cell.key)} has inconsistent cone history {list(cell.history)}")
        for f in cell.facets:
            counts[f.key] += 1

    for key, count in sorted(counts.items()):
        on_boundary = any(set(key) <= facet for facet in polytope_facets)
        expected = 1 if on_boundary else 2
        if count != expected:
            problems.append(f"face {list(key)} belongs to {count} cell(s), expected {expected}")

    faces = {}
    for cell in cells:
        for face in cell.faces():
            faces[face.vertices] = face.dim
    chi = sum((-1) ** d for d in faces.values())
    if chi != 1:
        problems.append(f"Euler characteristic of the cells is {chi}, expected 1")
    return problems


def cone_subdivide(polyhedron: Polyhedron, vertex_keys: Sequence) -> List[Tuple[int, ...]]:
    """Pull a polytope at every vertex in increasing key order.

    ``vertex_keys[v]`` ranks local vertex ``v``; the smallest key is
    pulled first. Returns simplices as local vertex tuples in pulling order,
    sorted. Every stage is audited.
    """
    lattice = polyhedron.lattice
    if len(set(vertex_keys)) != len(vertex_keys):
        raise PreconditionError("repeated vertex class in a polyhedron; pulling needs distinct classes")
    order = sorted(range(len(vertex_keys)), key=lambda v: vertex_keys[v])
    rank = {v: i for i, v in enumerate(order)}

    state = None
    for state in subdivision_stages(lattice, order):
        problems = audit_stage(state.cells, lattice)
        if problems:
            logger.error(f"Stage {state.stage} audit failed: {problems}")
            raise VerificationError(f"pulling stage {state.stage} does not tile the polytope", problems)

    not_simplices = [c for c in state.cells if not c.is_simplex]
    if not_simplices:
        raise VerificationError("pulling left non-simplicial cells",
                                [f"cell {list(c.key)} has {len(c.vertices)} vertices" for c in not_simplices])
    simplices = sorted(tuple(sorted(c.vertices, key=rank.__getitem__)) for c in state.cells)
    logger.debug(f"Pulled {len(lattice.vertices)}-vertex polytope into {len(simplices)} simplices")
    return simplices
