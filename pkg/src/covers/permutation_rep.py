"""Permutation representations of a face-pairing presentation.

Points are 0-based. The action is on the right: a point moves through a word
letter by letter, ``p . x = images[x][p]``, so ``a*b`` in sympy (apply ``a``,
then ``b``) is the image of the word ``ab``.
"""

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from src.core.errors import InputError
from src.core.presentation import GroupPresentation, Word, spell

logger = logging.getLogger(__name__)

CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class PermutationRep:
    degree: int
    images: Tuple[Tuple[int, ...], ...]

    @classmethod
    def trivial(cls, num_generators: int, degree: int = 1) -> "PermutationRep":
        return cls(degree, tuple(tuple(range(degree)) for _ in range(num_generators)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[str]) -> "PermutationRep":
        """Build from one cycle-notation string per generator, e.g. ``"(0 1)(2 3)"``."""
        images = []
        for text in cycles:
            image = list(range(degree))
            seen = set()
            for body in CYCLE.findall(text):
                points = [int(token) for token in body.replace(",", " ").split()]
                for p in points:
                    if not 0 <= p < degree or p in seen:
                        raise InputError(f"Bad cycle notation '{text}' for degree {degree}")
                    seen.add(p)
                for i, p in enumerate(points):
                    image[p] = points[(i + 1) % len(points)]
            if CYCLE.sub("", text).strip():
                raise InputError(f"Bad cycle notation '{text}'")
            images.append(tuple(image))
        return cls(degree, tuple(images))

    @property
    def num_generators(self) -> int:
        return len(self.images)

    @property
    def key(self) -> Tuple:
        return (self.degree, self.images)

    @cached_property
    def permutations(self) -> List[Permutation]:
        return [Permutation(list(image), size=self.degree) for image in self.images]

    @cached_property
    def group(self) -> PermutationGroup:
        return PermutationGroup(self.permutations or [Permutation(list(range(self.degree)))])

    @cached_property
    def image_order(self) -> int:
        return int(self.group.order())

    @property
    def is_transitive(self) -> bool:
        return self.degree == 1 or len(self.group.orbit(0)) == self.degree

    @property
    def is_regular(self) -> bool:
        """All point stabilizers coincide, i.e. the image acts freely."""
        order = self.image_order
        return all(len(orbit) == order for orbit in self.group.orbits())

    def act(self, point: int, word: Word) -> int:
        for letter in word:
            point = self.letter_image(letter)[point]
        return point

    def letter_image(self, letter: int) -> Tuple[int, ...]:
        if letter > 0:
            return self.images[letter - 1]
        return self._inverses[-letter - 1]

    @cached_property
    def _inverses(self) -> Tuple[Tuple[int, ...], ...]:
        inverses = []
        for image in self.images:
            inverse = [0] * self.degree
            for p, q in enumerate(image):
                inverse[q] = p
            inverses.append(tuple(inverse))
        return tuple(inverses)

    def evaluate(self, word: Word) -> Tuple[int, ...]:
        """One-line image of ``word``."""
        return tuple(self.act(p, word) for p in range(self.degree))

    def failing_relators(self, presentation: GroupPresentation) -> List[Word]:
        identity = tuple(range(self.degree))
        return [r for r in presentation.all_relators if self.evaluate(r) != identity]

    def satisfies(self, presentation: GroupPresentation) -> bool:
        return self.num_generators == presentation.num_generators and not self.failing_relators(presentation)

    def cycle_notation(self) -> List[str]:
        notation = []
        for perm in self.permutations:
            cycles = perm.cyclic_form
            notation.append("".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles) or "()")
        return notation

    def to_dict(self) -> Dict:
        return {
            "degree": self.degree,
            "generators": {spell((k,)): c for k, c in enumerate(self.cycle_notation(), start=1)},
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "PermutationRep":
        try:
            generators = data["generators"]
            ordered = [generators[spell((k,))] for k in range(1, len(generators) + 1)]
            return cls.from_cycles(int(data["degree"]), ordered)
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"Malformed permutation representation: {e}")

    def __str__(self) -> str:
        gens = ", ".join(f"{spell((k,))}={c}" for k, c in enumerate(self.cycle_notation(), start=1))
        return f"PermutationRep(degree={self.degree}: {gens})"


def disjoint_union(reps: Sequence[PermutationRep]) -> PermutationRep:
    """Action on the disjoint union of the point sets; its kernel is the
    intersection of the kernels."""
    if not reps:
        raise ValueError("need at least one representation")
    images: List[List[int]] = [[] for _ in range(reps[0].num_generators)]
    offset = 0
    for rep in reps:
        if rep.num_generators != reps[0].num_generators:
            raise InputError("representations are over different presentations")
        for k, image in enumerate(rep.images):
            images[k].extend(q + offset for q in image)
        offset += rep.degree
    return PermutationRep(offset, tuple(tuple(i) for i in images))
