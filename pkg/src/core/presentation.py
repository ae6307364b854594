"""Face-pairing presentations of the fundamental group.

Words are tuples of non-zero ints: ``k`` is generator ``k`` (1-based) and
``-k`` its inverse. They are printed with lower-case letters for generators
and upper-case letters for inverses.
"""

import hashlib
import json
import logging
import string
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from .complex import PolyhedralComplex
from .errors import InputError, PreconditionError, UnsupportedDimensionError, VerificationError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]

SUPPORTED_DIMENSIONS = (2, 3)


def invert(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def free_reduce(word: Sequence[int]) -> Word:
    stack: List[int] = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def cyclic_reduce(word: Sequence[int]) -> Word:
    reduced = list(free_reduce(word))
    while len(reduced) > 1 and reduced[0] == -reduced[-1]:
        reduced = reduced[1:-1]
    return tuple(reduced)


def spell(word: Sequence[int]) -> str:
    if not word:
        return "1"
    letters = []
    for x in word:
        k = abs(x)
        if k <= len(string.ascii_lowercase):
            letter = string.ascii_lowercase[k - 1]
            letters.append(letter if x > 0 else letter.upper())
        else:
            letters.append(f"x{k}" if x > 0 else f"X{k}")
    return "".join(letters)


def parse_word(text: str) -> Word:
    """Inverse of :func:`spell` for single-letter generator names."""
    if text == "1":
        return ()
    word = []
    for ch in text:
        if ch in string.ascii_lowercase:
            word.append(string.ascii_lowercase.index(ch) + 1)
        elif ch in string.ascii_uppercase:
            word.append(-(string.ascii_uppercase.index(ch) + 1))
        else:
            raise InputError(f"Cannot parse '{ch}' in word '{text}'")
    return tuple(word)


@dataclass(frozen=True)
class RelatorBase:
    """Starting instance of a codimension-2 cycle: leave ``polyhedron``
    through ``facet``, which contains ``face``."""
    polyhedron: int
    face: Tuple[int, ...]
    facet: int


@dataclass(frozen=True)
class GroupPresentation:
    num_generators: int
    relators: Tuple[Word, ...]
    tree_relators: Tuple[Word, ...] = ()
    bases: Tuple[RelatorBase, ...] = ()

    @property
    def all_relators(self) -> Tuple[Word, ...]:
        return self.relators + self.tree_relators

    @property
    def tree_generators(self) -> Tuple[int, ...]:
        return tuple(r[0] for r in self.tree_relators)

    @property
    def fingerprint(self) -> str:
        payload = [self.num_generators, [list(r) for r in self.relators], [list(r) for r in self.tree_relators]]
        return hashlib.sha256(json.dumps(payload).encode("utf-8")).hexdigest()

    def __str__(self) -> str:
        gens = ", ".join(spell((k,)) for k in range(1, self.num_generators + 1))
        rels = ", ".join(spell(r) for r in self.all_relators)
        return f"<{gens} | {rels}>"

    def to_dict(self) -> Dict:
        return {
            "generators": [spell((k,)) for k in range(1, self.num_generators + 1)],
            "relators": [spell(r) for r in self.relators],
            "tree_relators": [spell(r) for r in self.tree_relators],
        }


def extract_presentation(complex: PolyhedralComplex) -> GroupPresentation:
    """One generator per pairing, one relator per codimension-2 face class.

    Pairings on a spanning tree of the dual graph get an extra one-letter
    relator so the result presents the fundamental group.
    """
    cached = complex._derived.get("presentation")
    if cached is not None:
        return cached

    if complex.dim not in SUPPORTED_DIMENSIONS:
        raise UnsupportedDimensionError(
            f"unsupported dimension for presentation extraction: {complex.dim}"
        )
    if complex.free_boundary or not complex.is_closed:
        raise PreconditionError("complex is not closed: presentation extraction needs every facet paired")

    relators = []
    bases = []
    for members in complex.face_partition(complex.dim - 2).classes:
        p, face = members[0]
        facets = complex.polyhedra[p].facets_containing(frozenset(face))
        if len(facets) != 2:
            raise VerificationError(
                f"codimension-2 face {list(face)} of polyhedron {p} lies in {len(facets)} facets, expected 2"
            )
        base = RelatorBase(p, face, facets[0])
        relators.append(cyclic_reduce(_walk_cycle(complex, base)))
        bases.append(base)

    tree = _spanning_tree_generators(complex)
    presentation = GroupPresentation(
        num_generators=len(complex.pairings),
        relators=tuple(relators),
        tree_relators=tuple((k,) for k in sorted(tree)),
        bases=tuple(bases),
    )
    logger.info(
        f"Extracted presentation with {presentation.num_generators} generators, "
        f"{len(presentation.relators)} cycle relators and {len(presentation.tree_relators)} tree relators"
    )
    complex._derived["presentation"] = presentation
    return presentation


def _walk_cycle(complex: PolyhedralComplex, base: RelatorBase) -> Word:
    start_face = frozenset(base.face)
    poly, face, exit_facet = base.polyhedron, start_face, base.facet
    track = {v: v for v in start_face}
    word = []
    limit = 2 * sum(len(p.lattice.faces[complex.dim - 2]) for p in complex.polyhedra) + 2
    for _ in range(limit):
        crossing = complex.crossing(poly, exit_facet)
        word.append(crossing.letter)
        track = {v: crossing.vertex_map[u] for v, u in track.items()}
        face = frozenset(crossing.vertex_map[u] for u in face)
        poly = crossing.polyhedron
        exit_facet = _other_facet(complex, poly, face, crossing.facet)
        if (poly, face, exit_facet) == (base.polyhedron, start_face, base.facet) and \
                all(track[v] == v for v in track):
            return tuple(word)
    raise VerificationError(f"cycle around {list(base.face)} in polyhedron {base.polyhedron} does not close")


def _other_facet(complex: PolyhedralComplex, poly: int, face: frozenset, arrived: int) -> int:
    others = [f for f in complex.polyhedra[poly].facets_containing(face) if f != arrived]
    if len(others) != 1:
        raise VerificationError(f"face {sorted(face)} of polyhedron {poly} is not in exactly two facets")
    return others[0]


def _spanning_tree_generators(complex: PolyhedralComplex) -> List[int]:
    visited = set()
    tree = []
    for root in range(len(complex.polyhedra)):
        if root in visited:
            continue
        visited.add(root)
        queue = deque([root])
        while queue:
            p = queue.popleft()
            for f in range(len(complex.polyhedra[p].facets)):
                crossing = complex.crossing(p, f)
                if crossing is not None and crossing.polyhedron not in visited:
                    visited.add(crossing.polyhedron)
                    tree.append(abs(crossing.letter))
                    queue.append(crossing.polyhedron)
    return tree


def replay_relator(complex: PolyhedralComplex, presentation: GroupPresentation, index: int) -> bool:
    """Re-walk relator ``index`` from its base; True if it closes up with
    the identity vertex map."""
    base = presentation.bases[index]
    word = presentation.relators[index]
    start_face = frozenset(base.face)
    poly, face, exit_facet = base.polyhedron, start_face, base.facet
    track = {v: v for v in start_face}
    for letter in word:
        crossing = complex.crossing(poly, exit_facet)
        if crossing is None or crossing.letter != letter:
            return False
        track = {v: crossing.vertex_map[u] for v, u in track.items()}
        face = frozenset(crossing.vertex_map[u] for u in face)
        poly = crossing.polyhedron
        exit_facet = _other_facet(complex, poly, face, crossing.facet)
    return (poly, face, exit_facet) == (base.polyhedron, start_face, base.facet) and \
        all(track[v] == v for v in track)


def exponent_matrix(presentation: GroupPresentation) -> List[List[int]]:
    rows = []
    for relator in presentation.all_relators:
        row = [0] * presentation.num_generators
        for letter in relator:
            row[abs(letter) - 1] += 1 if letter > 0 else -1
        rows.append(row)
    return rows


def abelianization(presentation: GroupPresentation) -> Tuple[int, List[int]]:
    """Free rank and torsion coefficients of the abelianized group."""
    n = presentation.num_generators
    rows = [row for row in exponent_matrix(presentation) if any(row)]
    if n == 0:
        return 0, []
    if not rows:
        return n, []

    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    nonzero = [d for d in diagonal if d != 0]
    return n - len(nonzero), sorted(d for d in nonzero if d > 1)


def presentation_from_words(num_generators: int, relators: Sequence[str],
                            tree_relators: Optional[Sequence[str]] = None) -> GroupPresentation:
    """Build a presentation directly from spelled words."""
    return GroupPresentation(
        num_generators=num_generators,
        relators=tuple(parse_word(r) for r in relators),
        tree_relators=tuple(parse_word(r) for r in tree_relators or ()),
    )
