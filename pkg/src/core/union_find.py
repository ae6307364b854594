"""Disjoint-set forest used for every orbit computation."""

from typing import Dict, Hashable, Iterable, List, Tuple


class UnionFind:
    """Dictionary-based union-find with union by rank and path compression.

    Works with any hashable, orderable element. Elements never passed to
    ``union`` are singletons.
    """

    def __init__(self, elements: Iterable[Hashable] = ()):
        self._parents: Dict[Hashable, Hashable] = {}
        self._ranks: Dict[Hashable, int] = {}
        for element in elements:
            self.add(element)

    def add(self, a: Hashable) -> None:
        if a not in self._parents:
            self._parents[a] = a
            self._ranks[a] = 0

    def find(self, a: Hashable) -> Hashable:
        """Return the representative of ``a``, adding it if unseen."""
        self.add(a)
        path = [a]
        root = self._parents[a]
        while root != path[-1]:
            path.append(root)
            root = self._parents[root]

        for ancestor in path:
            self._parents[ancestor] = root
        return root

    def union(self, a: Hashable, b: Hashable) -> None:
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return

        rank_a = self._ranks[root_a]
        rank_b = self._ranks[root_b]
        if rank_a < rank_b:
            self._parents[root_a] = root_b
        elif rank_a > rank_b:
            self._parents[root_b] = root_a
        else:
            self._parents[root_b] = root_a
            self._ranks[root_a] += 1

    def connected(self, a: Hashable, b: Hashable) -> bool:
        return self.find(a) == self.find(b)

    def classes(self) -> List[Tuple[Hashable, ...]]:
        """Classes with sorted members, ordered by their smallest member."""
        groups: Dict[Hashable, List[Hashable]] = {}
        for element in self._parents:
            groups.setdefault(self.find(element), []).append(element)
        return sorted((tuple(sorted(members)) for members in groups.values()), key=lambda c: c[0])
