"""Total orders on vertex classes."""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from src.core.complex import PolyhedralComplex
from src.core.errors import InputError, PreconditionError
from src.diagonals.diagonals import enumerate_diagonals

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexOrdering:
    """Vertex classes listed from first pulled to last.

    ``classes[0]`` is v_0, the vertex every polyhedron containing it is
    coned to first.
    """
    classes: Tuple[int, ...]
    _position: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        position = {c: i for i, c in enumerate(self.classes)}
        if len(position) != len(self.classes):
            raise InputError("vertex ordering lists a class twice")
        object.__setattr__(self, "_position", position)

    def position(self, vertex_class: int) -> int:
        return self._position[vertex_class]

    def __len__(self) -> int:
        return len(self.classes)

    def to_list(self):
        return list(self.classes)


def parse_order_spec(spec: str, num_classes: int) -> Tuple[int, ...]:
    """``default``, ``reverse``, ``random:SEED`` or a comma separated list."""
    spec = spec.strip()
    base = list(range(num_classes))
    if spec == "default":
        return tuple(base)
    if spec == "reverse":
        return tuple(reversed(base))
    if spec.startswith("random:"):
        try:
            seed = int(spec.split(":", 1)[1])
        except ValueError:
            raise InputError(f"Invalid random ordering seed in '{spec}'")
        random.Random(seed).shuffle(base)
        return tuple(base)
    try:
        return tuple(int(x) for x in spec.replace(",", " ").split())
    except ValueError:
        raise InputError(f"Unrecognized ordering '{spec}'")


def order_vertices(complex: PolyhedralComplex,
                   seed_order: Optional[Sequence[int]] = None) -> VertexOrdering:
    """Order the vertex classes of a complex without returning diagonals.

    The default is class-id order; ``seed_order`` must be a permutation of
    the class ids.
    """
    offending = enumerate_diagonals(complex, with_witnesses=False).first_returning
    if offending is not None:
        p, v, w = offending.key
        label = complex.polyhedra[p].label or str(p)
        raise PreconditionError(
            f"returning diagonal ({v}, {w}) in polyhedron {label}: two of its vertices share a class"
        )

    n = len(complex.vertex_partition)
    if seed_order is None:
        classes = tuple(range(n))
    else:
        classes = tuple(seed_order)
        if sorted(classes) != list(range(n)):
            raise InputError(f"ordering must be a permutation of the {n} vertex classes")
    logger.debug(f"Vertex ordering: {list(classes)}")
    return VertexOrdering(classes)
