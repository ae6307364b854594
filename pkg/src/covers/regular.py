"""Regular representations: normal cores and common regular covers."""

import logging
import random
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from src.config import settings
from src.core.errors import CapExceededError, InputError, PreconditionError, VerificationError
from src.core.presentation import GroupPresentation, Word, spell

from .permutation_rep import PermutationRep, disjoint_union

logger = logging.getLogger(__name__)


def regularize(rep: PermutationRep, cap: Optional[int] = None) -> PermutationRep:
    """Right regular representation of the image group of ``rep``.

    Its point stabilizer is the kernel of ``rep``, the normal core of the
    stabilizer of point 0, so the new cover is regular and factors through
    the old one.
    """
    if not rep.is_transitive:
        raise PreconditionError("regularize needs a transitive representation")
    return regular_image(rep, cap)


def regular_image(rep: PermutationRep, cap: Optional[int] = None) -> PermutationRep:
    """Regular representation of the image group, transitive or not.

    Elements are labeled in breadth-first order from the identity with
    generators taken in index order, so isomorphic inputs with the same
    multiplication table give identical outputs.
    """
    cap = settings.REGULARIZATION_CAP if cap is None else cap
    order = rep.image_order
    if order > cap:
        logger.warning(f"Image order {order} exceeds regularization cap {cap}")
        raise CapExceededError(order, cap)

    identity = tuple(range(rep.degree))
    elements: List[Tuple[int, ...]] = [identity]
    index: Dict[Tuple[int, ...], int] = {identity: 0}
    queue = deque([identity])
    while queue:
        element = queue.popleft()
        for image in rep.images:
            product = tuple(image[element[p]] for p in range(rep.degree))
            if product not in index:
                index[product] = len(elements)
                elements.append(product)
                queue.append(product)

    if len(elements) != order:
        raise VerificationError(f"enumerated {len(elements)} group elements, expected {order}")

    images = tuple(
        tuple(index[tuple(image[e[p]] for p in range(rep.degree))] for e in elements)
        for image in rep.images
    )
    regular = PermutationRep(len(elements), images)
    logger.debug(f"Regularized degree-{rep.degree} rep to degree {regular.degree}")
    return regular


def common_cover(reps: Sequence[PermutationRep], cap: Optional[int] = None) -> PermutationRep:
    """Regular rep whose kernel is the intersection of the inputs' kernels."""
    if not reps:
        raise PreconditionError("common_cover needs at least one representation")
    if any(r.num_generators != reps[0].num_generators for r in reps):
        raise InputError("representations are over different presentations")
    if len(reps) == 1:
        return regularize(reps[0], cap)
    return regular_image(disjoint_union(reps), cap)


def sample_words(num_generators: int, samples: int, seed: int,
                 max_length: Optional[int] = None) -> List[Word]:
    rng = random.Random(seed)
    max_length = max_length or settings.MAX_SAMPLE_WORD_LENGTH
    letters = [k for g in range(1, num_generators + 1) for k in (g, -g)]
    words = []
    for _ in range(samples):
        length = rng.randint(1, max_length)
        words.append(tuple(rng.choice(letters) for _ in range(length)))
    return words


def word_order(rep: PermutationRep, word: Word) -> int:
    """Order of the image of ``word``."""
    image = rep.evaluate(word)
    identity = tuple(range(rep.degree))
    power, order = image, 1
    while power != identity:
        power = tuple(image[p] for p in power)
        order += 1
    return order


def factorization_failures(common: PermutationRep, reps: Sequence[PermutationRep],
                           presentation: Optional[GroupPresentation] = None,
                           samples: Optional[int] = None, seed: Optional[int] = None) -> List[str]:
    """Words fixing point 0 of ``common`` that move point 0 of some input.

    Samples random words and each word raised to the order of its image in
    ``common``, which always lies in the common kernel. Relators of the
    presentation, if given, must be trivial everywhere.
    """
    samples = settings.FACTORIZATION_SAMPLES if samples is None else samples
    seed = settings.SAMPLE_SEED if seed is None else seed
    words = sample_words(common.num_generators, samples, seed)
    powered = [w * word_order(common, w) for w in words]

    failures = []
    for word in words + powered:
        if common.act(0, word) != 0:
            continue
        for i, rep in enumerate(reps):
            if rep.act(0, word) != 0:
                failures.append(f"word {spell(word)} fixes the common base point but moves it in input {i}")
    if presentation is not None:
        for rep in [common, *reps]:
            for relator in rep.failing_relators(presentation):
                failures.append(f"relator {spell(relator)} is not trivial in a degree-{rep.degree} rep")
    return failures


def verify_factorization(common: PermutationRep, reps: Sequence[PermutationRep],
                         presentation: Optional[GroupPresentation] = None,
                         samples: Optional[int] = None, seed: Optional[int] = None) -> None:
    failures = factorization_failures(common, reps, presentation, samples, seed)
    if failures:
        logger.error(f"Factorization check failed with {len(failures)} failure(s)")
        raise VerificationError("common cover does not factor through its inputs", failures)
