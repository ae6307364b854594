"""Diagonals of a complex: returning status and witness words."""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.core.complex import PolyhedralComplex, VertexInstance
from src.core.errors import InputError, PreconditionError, VerificationError
from src.core.presentation import Word, spell

logger = logging.getLogger(__name__)

DiagonalKey = Tuple[int, int, int]


@dataclass(frozen=True)
class Diagonal:
    """Unordered pair ``v < w`` of distinct vertices of one polyhedron."""
    polyhedron: int
    v: int
    w: int
    returning: bool
    witness: Optional[Word] = None
    base: Optional[DiagonalKey] = None

    @property
    def key(self) -> DiagonalKey:
        return (self.polyhedron, self.v, self.w)

    def to_dict(self) -> Dict:
        record = {
            "polyhedron": self.polyhedron,
            "vertices": [self.v, self.w],
            "returning": self.returning,
        }
        if self.witness is not None:
            record["witness"] = spell(self.witness)
        if self.base is not None:
            record["base"] = list(self.base)
        return record


@dataclass
class DiagonalSet:
    diagonals: List[Diagonal]
    fingerprint: str
    base_fingerprint: Optional[str] = None
    _by_key: Dict[DiagonalKey, Diagonal] = field(init=False, repr=False)

    def __post_init__(self):
        self._by_key = {d.key: d for d in self.diagonals}

    def __len__(self) -> int:
        return len(self.diagonals)

    def __iter__(self):
        return iter(self.diagonals)

    def get(self, polyhedron: int, v: int, w: int) -> Diagonal:
        return self._by_key[(polyhedron, min(v, w), max(v, w))]

    @property
    def returning(self) -> List[Diagonal]:
        return [d for d in self.diagonals if d.returning]

    @property
    def non_returning(self) -> List[Diagonal]:
        return [d for d in self.diagonals if not d.returning]

    @property
    def first_returning(self) -> Optional[Diagonal]:
        return next((d for d in self.diagonals if d.returning), None)

    def by_polyhedron(self) -> Dict[int, List[Diagonal]]:
        grouped: Dict[int, List[Diagonal]] = {}
        for d in self.diagonals:
            grouped.setdefault(d.polyhedron, []).append(d)
        return grouped

    def summary(self) -> Dict:
        return {
            "total": len(self.diagonals),
            "returning": len(self.returning),
            "non_returning": len(self.non_returning),
        }

    def to_dict(self) -> Dict:
        return {**self.summary(), "diagonals": [d.to_dict() for d in self.diagonals]}


def enumerate_diagonals(complex: PolyhedralComplex, with_witnesses: bool = True) -> DiagonalSet:
    """Every unordered vertex pair of every polyhedron, with returning flags.

    Witness words are attached to returning diagonals and replayed before
    being accepted.
    """
    partition = complex.vertex_partition
    diagonals = []
    for p, poly in enumerate(complex.polyhedra):
        paths = None
        for v in range(poly.num_vertices):
            for w in range(v + 1, poly.num_vertices):
                returning = partition.class_of((p, v)) == partition.class_of((p, w))
                witness = None
                if returning and with_witnesses:
                    if paths is None or paths[0] != v:
                        paths = (v, _shortest_words(complex, (p, v)))
                    witness = paths[1][(p, w)]
                    if replay_witness(complex, p, v, witness) != (p, w):
                        raise VerificationError(f"witness {spell(witness)} does not carry ({p}, {v}) to ({p}, {w})")
                diagonals.append(Diagonal(p, v, w, returning, witness))

    result = DiagonalSet(diagonals, complex.fingerprint)
    logger.info(f"Enumerated {len(result)} diagonals, {len(result.returning)} returning")
    return result


def witness_word(complex: PolyhedralComplex, diagonal: Diagonal) -> Word:
    """Shortest pairing word carrying the instance (P, v) onto (P, w)."""
    if not diagonal.returning:
        raise PreconditionError(
            f"diagonal ({diagonal.v}, {diagonal.w}) of polyhedron {diagonal.polyhedron} is not returning"
        )
    words = _shortest_words(complex, (diagonal.polyhedron, diagonal.v))
    target = (diagonal.polyhedron, diagonal.w)
    if target not in words:
        raise VerificationError(f"no pairing chain reaches {target}")
    return words[target]


def replay_witness(complex: PolyhedralComplex, polyhedron: int, vertex: int, word: Word) -> Optional[VertexInstance]:
    """Follow ``word`` from the instance (polyhedron, vertex); None if a
    letter does not apply at the current instance."""
    current = (polyhedron, vertex)
    for letter in word:
        pairing = complex.pairings[abs(letter) - 1]
        if letter > 0:
            (poly, facet), (target, _), mapping = pairing.source, pairing.target, pairing.forward
        else:
            (poly, facet), (target, _), mapping = pairing.target, pairing.source, pairing.backward
        if current[0] != poly or current[1] not in complex.polyhedra[poly].facet(facet):
            return None
        current = (target, mapping[current[1]])
    return current


def _neighbours(complex: PolyhedralComplex) -> Dict[VertexInstance, List[Tuple[int, VertexInstance]]]:
    cached = complex._derived.get("identification_graph")
    if cached is not None:
        return cached
    graph: Dict[VertexInstance, List[Tuple[int, VertexInstance]]] = {i: [] for i in complex.vertex_instances()}
    for k, pairing in enumerate(complex.pairings, start=1):
        src, dst = pairing.source[0], pairing.target[0]
        for a, b in pairing.vertex_map:
            graph[(src, a)].append((k, (dst, b)))
            graph[(dst, b)].append((-k, (src, a)))
    for edges in graph.values():
        # letter order 1, -1, 2, -2, ...
        edges.sort(key=lambda e: (abs(e[0]), e[0] < 0))
    complex._derived["identification_graph"] = graph
    return graph


def _shortest_words(complex: PolyhedralComplex, start: VertexInstance) -> Dict[VertexInstance, Word]:
    graph = _neighbours(complex)
    parents: Dict[VertexInstance, Optional[Tuple[VertexInstance, int]]] = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for letter, nxt in graph[node]:
            if nxt not in parents:
                parents[nxt] = (node, letter)
                queue.append(nxt)

    words: Dict[VertexInstance, Word] = {}
    for node in parents:
        letters = []
        cursor = node
        while parents[cursor] is not None:
            cursor, letter = parents[cursor]
            letters.append(letter)
        words[node] = tuple(reversed(letters))
    return words


def diagonals_after_cover(base_diagonals: DiagonalSet, cover, with_witnesses: bool = True) -> DiagonalSet:
    """Diagonal set of a cover, each diagonal tagged with the base diagonal
    it projects to."""
    if base_diagonals.fingerprint != cover.base.fingerprint:
        raise InputError("mismatched base: diagonal set was computed for a different complex")

    raw = enumerate_diagonals(cover.total, with_witnesses=with_witnesses)
    tagged = []
    for d in raw:
        base_poly = cover.project(d.polyhedron)
        base_key = (base_poly, d.v, d.w)
        try:
            base_diagonals.get(*base_key)
        except KeyError:
            raise InputError(f"mismatched base: cover diagonal {d.key} projects to unknown {base_key}")
        tagged.append(Diagonal(d.polyhedron, d.v, d.w, d.returning, d.witness, base=base_key))
    return DiagonalSet(tagged, raw.fingerprint, base_fingerprint=base_diagonals.fingerprint)


def monotonicity_violations(base_diagonals: DiagonalSet, after: DiagonalSet) -> List[Diagonal]:
    """Cover diagonals that return although their base diagonal does not."""
    return [d for d in after if d.returning and not base_diagonals.get(*d.base).returning]
