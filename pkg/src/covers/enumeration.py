"""Low-index enumeration of transitive permutation representations.

Backtracking over partial coset tables. Columns are ordered
``x1, x1^-1, x2, x2^-1, ...``; the first undefined entry in row-major order
is filled with every admissible point, and relators are scanned from every
point to deduce forced entries or reject the branch. Complete tables are
emitted only in their conjugation-canonical labeling, so each conjugacy
class of index-d subgroups appears exactly once, in lexicographic order.
"""

import logging
from typing import Iterator, List, Optional, Tuple

from src.core.presentation import GroupPresentation

from .permutation_rep import PermutationRep

logger = logging.getLogger(__name__)

UNDEFINED = -1


def _column(letter: int) -> int:
    return 2 * (abs(letter) - 1) + (0 if letter > 0 else 1)


class CosetTable:
    """Partial table of a right action on at most ``degree`` points."""

    def __init__(self, num_generators: int, degree: int):
        self.width = 2 * num_generators
        self.degree = degree
        self.rows: List[List[int]] = [[UNDEFINED] * self.width]

    def copy(self) -> "CosetTable":
        other = CosetTable.__new__(CosetTable)
        other.width = self.width
        other.degree = self.degree
        other.rows = [row[:] for row in self.rows]
        return other

    @property
    def used(self) -> int:
        return len(self.rows)

    def define(self, p: int, col: int, q: int) -> bool:
        """Set p.col = q and q.col^-1 = p; False on a clash."""
        inv = col ^ 1
        if self.rows[p][col] not in (UNDEFINED, q) or self.rows[q][inv] not in (UNDEFINED, p):
            return False
        self.rows[p][col] = q
        self.rows[q][inv] = p
        return True

    def new_point(self) -> int:
        self.rows.append([UNDEFINED] * self.width)
        return len(self.rows) - 1

    def first_gap(self) -> Optional[Tuple[int, int]]:
        for p, row in enumerate(self.rows):
            for col, value in enumerate(row):
                if value == UNDEFINED:
                    return p, col
        return None

    def deduce(self, relators: List[List[int]]) -> bool:
        """Scan every relator from every point until nothing new is forced.

        Returns False as soon as a relator cannot close.
        """
        changed = True
        while changed:
            changed = False
            for relator in relators:
                n = len(relator)
                for p in range(self.used):
                    f, i = p, 0
                    while i < n and self.rows[f][relator[i]] != UNDEFINED:
                        f = self.rows[f][relator[i]]
                        i += 1
                    if i == n:
                        if f != p:
                            return False
                        continue
                    b, j = p, n - 1
                    while j >= i and self.rows[b][relator[j] ^ 1] != UNDEFINED:
                        b = self.rows[b][relator[j] ^ 1]
                        j -= 1
                    if j < i:
                        if f != b:
                            return False
                    elif j == i:
                        if not self.define(f, relator[i], b):
                            return False
                        changed = True
        return True

    def canonical_from(self, base: int) -> Optional[List[List[int]]]:
        """Relabel a complete table by breadth-first order from ``base``."""
        labels = {base: 0}
        order = [base]
        i = 0
        while i < len(order):
            for value in self.rows[order[i]]:
                if value not in labels:
                    labels[value] = len(order)
                    order.append(value)
            i += 1
        if len(order) != self.used:
            return None
        return [[labels[self.rows[old][col]] for col in range(self.width)] for old in order]

    def is_canonical(self) -> bool:
        for base in range(1, self.used):
            relabeled = self.canonical_from(base)
            if relabeled is not None and relabeled < self.rows:
                return False
        return True

    def to_rep(self) -> PermutationRep:
        images = tuple(
            tuple(self.rows[p][2 * k] for p in range(self.used))
            for k in range(self.width // 2)
        )
        return PermutationRep(self.used, images)


def enumerate_reps(presentation: GroupPresentation, degree: int,
                   limit: Optional[int] = None) -> Iterator[PermutationRep]:
    """Yield transitive degree-``degree`` reps up to conjugation.

    Each yielded rep satisfies every relator, tree relators included. The
    stream is complete unless cut short by ``limit``.
    """
    if degree < 1:
        raise ValueError(f"degree must be at least 1, got {degree}")
    if limit is not None and limit <= 0:
        return

    relators = [[_column(x) for x in r] for r in presentation.all_relators if r]
    root = CosetTable(presentation.num_generators, degree)
    if presentation.num_generators == 0:
        if degree == 1:
            yield PermutationRep(1, ())
        return
    if not root.deduce(relators):
        return

    emitted = 0
    stack = [root]
    while stack:
        table = stack.pop()
        gap = table.first_gap()
        if gap is None:
            if table.used == degree and table.is_canonical():
                rep = table.to_rep()
                emitted += 1
                yield rep
                if limit is not None and emitted >= limit:
                    return
            continue

        p, col = gap
        children = []
        for q in range(table.used):
            if table.rows[q][col ^ 1] == UNDEFINED:
                child = table.copy()
                if child.define(p, col, q) and child.deduce(relators):
                    children.append(child)
        if table.used < degree:
            child = table.copy()
            q = child.new_point()
            if child.define(p, col, q) and child.deduce(relators):
                children.append(child)
        # depth-first, smallest choice first
        stack.extend(reversed(children))


def count_reps(presentation: GroupPresentation, degree: int) -> int:
    return sum(1 for _ in enumerate_reps(presentation, degree))
