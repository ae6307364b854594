"""Face lattices of convex polytopes given by vertices and facets."""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

logger = logging.getLogger(__name__)

Face = FrozenSet[int]


@dataclass(frozen=True)
class FaceLattice:
    """Combinatorial polytope: ``faces[k]`` lists the rank-k faces.

    Faces are sets of local vertex ids, sorted within a rank by their sorted
    vertex tuple. ``faces[dim]`` is the single top face.
    """
    dim: int
    vertices: Tuple[int, ...]
    faces: Tuple[Tuple[Face, ...], ...]
    _ranks: Dict[Face, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        ranks = {face: k for k, rank_faces in enumerate(self.faces) for face in rank_faces}
        object.__setattr__(self, "_ranks", ranks)

    @classmethod
    def from_facets(cls, num_vertices: int, facets: Sequence[Sequence[int]]) -> "FaceLattice":
        return _build_lattice(num_vertices, tuple(tuple(sorted(f)) for f in facets))

    @property
    def top(self) -> Face:
        return self.faces[self.dim][0]

    @property
    def facets(self) -> Tuple[Face, ...]:
        return self.faces[self.dim - 1]

    def rank_of(self, face: Face) -> int:
        rank = self._ranks.get(frozenset(face))
        if rank is None:
            raise KeyError(f"{sorted(face)} is not a face")
        return rank

    def is_face(self, face: Face) -> bool:
        return frozenset(face) in self._ranks

    def faces_within(self, face: Face, rank: int) -> List[Face]:
        """Faces of the given rank contained in ``face``."""
        return [g for g in self.faces[rank] if g <= face]

    def subfaces(self, face: Face) -> List[Face]:
        """Faces one rank below ``face``; the empty face for a vertex."""
        rank = self.rank_of(face)
        if rank == 0:
            return [frozenset()]
        return self.faces_within(face, rank - 1)

    def restrict(self, face: Face) -> "FaceLattice":
        """The lattice of a face, keeping the ambient local vertex ids."""
        rank = self.rank_of(face)
        return FaceLattice(
            dim=rank,
            vertices=tuple(sorted(face)),
            faces=tuple(tuple(self.faces_within(face, k)) for k in range(rank + 1)),
        )

    def problems(self) -> List[str]:
        """Violations of the polytope lattice axioms, empty when sound."""
        issues = []
        for v in self.vertices:
            if frozenset({v}) not in self._ranks:
                issues.append(f"vertex {v} is not the intersection of the facets containing it")
            elif self._ranks[frozenset({v})] != 0:
                issues.append(f"vertex {v} has rank {self._ranks[frozenset({v})]}")
        for face, rank in self._ranks.items():
            if rank >= 1 and len(face) < rank + 1:
                issues.append(f"face {sorted(face)} of rank {rank} has too few vertices")
            if rank == 1 and len(face) != 2:
                issues.append(f"edge {sorted(face)} does not have exactly two vertices")
        for k in range(self.dim - 1):
            for lower in self.faces[k]:
                for upper in self.faces[k + 2]:
                    if lower <= upper:
                        between = [g for g in self.faces[k + 1] if lower < g < upper]
                        if len(between) != 2:
                            issues.append(
                                f"interval {sorted(lower)} < {sorted(upper)} has {len(between)} "
                                f"faces in between, expected 2"
                            )
        for k in range(self.dim):
            for face in self.faces[k]:
                if not any(face < g for g in self.faces[k + 1]):
                    issues.append(f"face {sorted(face)} of rank {k} lies in no face of rank {k + 1}")
        return issues


def _sort_key(face: Face) -> Tuple[int, ...]:
    return tuple(sorted(face))


@lru_cache(maxsize=4096)
def _build_lattice(num_vertices: int, facets: Tuple[Tuple[int, ...], ...]) -> FaceLattice:
    top = frozenset(range(num_vertices))
    known = {frozenset(f) for f in facets}
    frontier = set(known)
    while frontier:
        new = set()
        for a in frontier:
            for b in known:
                meet = a & b
                if meet and meet not in known and meet not in new:
                    new.add(meet)
        known |= new
        frontier = new
    known.add(top)

    # rank = longest chain of proper subfaces down to a vertex
    rank: Dict[Face, int] = {}
    for face in sorted(known, key=len):
        below = [rank[g] for g in known if g < face and g in rank]
        rank[face] = 1 + max(below) if below else 0

    dim = rank[top]
    faces = tuple(
        tuple(sorted((f for f, r in rank.items() if r == k), key=_sort_key))
        for k in range(dim + 1)
    )
    return FaceLattice(dim=dim, vertices=tuple(range(num_vertices)), faces=faces)
