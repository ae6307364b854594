"""Immutable cells for iterated coning.

A cell is its vertex set together with its facets, each again a cell, down
to the empty cell. Coning adds one vertex and builds the cone's facets
structurally, so no face lattice is ever recomputed.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from src.core.lattice import Face, FaceLattice


@dataclass(frozen=True)
class Cell:
    vertices: FrozenSet[int]
    facets: Tuple["Cell", ...]
    dim: int
    history: Tuple[int, ...] = ()

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dim + 1

    @property
    def key(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vertices))

    def faces(self) -> Iterator["Cell"]:
        """Every nonempty face, the cell itself included, each once."""
        seen = set()
        stack = [self]
        while stack:
            cell = stack.pop()
            if cell.dim < 0 or cell.vertices in seen:
                continue
            seen.add(cell.vertices)
            yield cell
            stack.extend(cell.facets)

    def __repr__(self) -> str:
        return f"Cell({list(self.key)}, dim={self.dim})"


EMPTY = Cell(frozenset(), (), -1)


def cone(apex: int, base: Cell) -> Cell:
    """Cone with the given apex over ``base``; ``base`` must not contain it."""
    if apex in base.vertices:
        raise ValueError(f"apex {apex} already lies in {base!r}")
    return Cell(
        vertices=base.vertices | {apex},
        facets=(base,) + tuple(cone(apex, f) for f in base.facets),
        dim=base.dim + 1,
        history=base.history + (apex,),
    )


def pull(cell: Cell, apex: int) -> List[Cell]:
    """Replace a cell containing ``apex`` by the cones from ``apex`` over its
    facets that miss it. Cells not containing ``apex`` are kept."""
    if apex not in cell.vertices:
        return [cell]
    return [cone(apex, f) for f in cell.facets if apex not in f.vertices]


def from_lattice(lattice: FaceLattice, face: Optional[Face] = None) -> Cell:
    """Cell of a face of a polytope, the whole polytope by default."""
    memo: Dict[Face, Cell] = {}

    def build(f: Face) -> Cell:
        if f not in memo:
            subs = lattice.subfaces(f)
            facets = (EMPTY,) if subs == [frozenset()] else tuple(build(g) for g in subs)
            memo[f] = Cell(frozenset(f), facets, lattice.rank_of(f))
        return memo[f]

    return build(lattice.top if face is None else frozenset(face))


def simplex_cell(vertices: Iterable[int]) -> Cell:
    return _simplex(frozenset(vertices))


@lru_cache(maxsize=8192)
def _simplex(vertices: FrozenSet[int]) -> Cell:
    if not vertices:
        return EMPTY
    facets = tuple(_simplex(vertices - {v}) for v in sorted(vertices))
    return Cell(vertices, facets, len(vertices) - 1)
