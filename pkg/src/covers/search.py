"""Bounded search for a regular cover without returning diagonals."""

import base64
import binascii
import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from src.config import settings
from src.core.complex import PolyhedralComplex
from src.core.errors import CapExceededError, InputError, PreconditionError, VerificationError
from src.core.presentation import extract_presentation
from src.diagonals.diagonals import Diagonal, DiagonalSet, diagonals_after_cover, enumerate_diagonals, \
    monotonicity_violations

from .cover_complex import CoverComplex, build_cover, count_returning, kills_diagonal_in_some_lift
from .enumeration import enumerate_reps
from .permutation_rep import PermutationRep
from .regular import common_cover, regularize, verify_factorization

logger = logging.getLogger(__name__)


class SearchStatus(Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"


@dataclass
class Checkpoint:
    """Where a search stopped: the next rep to examine is number ``offset``
    (0-based) of the canonical stream at ``degree``."""
    mode: str
    fingerprint: str
    degree: int
    offset: int
    chosen: List[PermutationRep] = field(default_factory=list)

    def encode(self) -> str:
        payload = {
            "mode": self.mode,
            "fingerprint": self.fingerprint,
            "degree": self.degree,
            "offset": self.offset,
            "chosen": [rep.to_dict() for rep in self.chosen],
        }
        raw = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")
        return base64.urlsafe_b64encode(raw).decode("ascii")

    @classmethod
    def decode(cls, token: str) -> "Checkpoint":
        try:
            payload = json.loads(base64.urlsafe_b64decode(token.encode("ascii")))
            return cls(
                mode=payload["mode"],
                fingerprint=payload["fingerprint"],
                degree=int(payload["degree"]),
                offset=int(payload["offset"]),
                chosen=[PermutationRep.from_dict(r) for r in payload["chosen"]],
            )
        except (binascii.Error, UnicodeError, ValueError, KeyError, TypeError) as e:
            raise InputError(f"Malformed resume token: {e}")


@dataclass
class SearchOutcome:
    status: SearchStatus
    rep: Optional[PermutationRep] = None
    cover: Optional[CoverComplex] = None
    diagonals: Optional[DiagonalSet] = None
    mode: str = "direct"
    degrees_tried: List[int] = field(default_factory=list)
    reps_tested: int = 0
    cap_skips: List[Dict] = field(default_factory=list)
    checkpoint: Optional[str] = None
    reason: Optional[str] = None
    chosen: List[PermutationRep] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND

    def to_dict(self) -> Dict:
        record = {
            "status": self.status.value,
            "mode": self.mode,
            "degrees_tried": list(self.degrees_tried),
            "reps_tested": self.reps_tested,
            "cap_skips": list(self.cap_skips),
        }
        if self.rep is not None:
            record["rep"] = self.rep.to_dict()
            record["degree"] = self.rep.degree
        if self.chosen:
            record["chosen"] = [r.to_dict() for r in self.chosen]
        if self.checkpoint is not None:
            record["checkpoint"] = self.checkpoint
        if self.reason is not None:
            record["reason"] = self.reason
        return record


class _Budget:
    def __init__(self, max_reps: Optional[int]):
        self.max_reps = max_reps
        self.used = 0

    @property
    def spent(self) -> bool:
        return self.max_reps is not None and self.used >= self.max_reps


def search_cover_killing_diagonals(complex: PolyhedralComplex, max_degree: Optional[int] = None,
                                   cap: Optional[int] = None, per_diagonal: bool = False,
                                   resume: Optional[str] = None,
                                   max_reps: Optional[int] = None, samples: Optional[int] = None,
                                   seed: Optional[int] = None) -> SearchOutcome:
    """Find a regular cover whose lifted complex has no returning diagonal.

    Degrees are tried in increasing order and canonical reps in
    lexicographic order. ``max_reps`` bounds the reps examined by this call;
    when it runs out the outcome carries a checkpoint token that resumes the
    search exactly where it stopped.
    """
    max_degree = settings.MAX_COVER_DEGREE if max_degree is None else max_degree
    cap = settings.REGULARIZATION_CAP if cap is None else cap
    mode = "per-diagonal" if per_diagonal else "direct"
    if max_degree < 1 or cap < 1:
        raise InputError("max_degree and cap must be positive")

    base = enumerate_diagonals(complex)
    if not base.returning:
        raise PreconditionError("complex has no returning diagonals; skip the cover search")

    checkpoint = None
    if resume is not None:
        checkpoint = Checkpoint.decode(resume)
        if checkpoint.mode != mode:
            raise InputError(f"resume token is for {checkpoint.mode} search, not {mode}")
        if checkpoint.fingerprint != complex.fingerprint:
            raise InputError("resume token was issued for a different complex")

    budget = _Budget(max_reps)
    logger.info(f"Searching covers ({mode}) up to degree {max_degree}, cap {cap}")
    if per_diagonal:
        return _search_per_diagonal(complex, base, max_degree, cap, checkpoint, budget, samples, seed)
    return _search_direct(complex, base, max_degree, cap, checkpoint, budget)


def _search_direct(complex: PolyhedralComplex, base: DiagonalSet, max_degree: int, cap: int,
                   checkpoint: Optional[Checkpoint], budget: _Budget) -> SearchOutcome:
    presentation = extract_presentation(complex)
    outcome = SearchOutcome(SearchStatus.EXHAUSTED, mode="direct")
    start_degree = checkpoint.degree if checkpoint else 1
    start_offset = checkpoint.offset if checkpoint else 0
    seen = set()

    for degree in range(start_degree, max_degree + 1):
        outcome.degrees_tried.append(degree)
        offset = start_offset if degree == start_degree else 0
        for index, rep in enumerate(enumerate_reps(presentation, degree)):
            if index < offset:
                continue
            if budget.spent:
                return _interrupted(outcome, complex, "direct", degree, index, [])
            budget.used += 1
            outcome.reps_tested += 1

            try:
                regular = regularize(rep, cap)
            except CapExceededError as e:
                outcome.cap_skips.append({"degree": degree, "offset": index, "order": e.order})
                continue
            if regular.key in seen:
                continue
            seen.add(regular.key)

            cover = build_cover(complex, regular)
            remaining = count_returning(cover.total)
            logger.debug(f"Degree {degree} rep {index}: regular degree {regular.degree}, {remaining} returning")
            if remaining == 0:
                outcome.status = SearchStatus.FOUND
                outcome.rep = regular
                outcome.cover = cover
                outcome.diagonals = _verify_cover(base, cover)
                logger.info(f"Found regular cover of degree {regular.degree} from a degree-{degree} rep")
                return outcome
        logger.info(f"Degree {degree} searched without success")

    outcome.reason = "max-degree"
    outcome.checkpoint = Checkpoint("direct", complex.fingerprint, max_degree + 1, 0).encode()
    return outcome


def _search_per_diagonal(complex: PolyhedralComplex, base: DiagonalSet, max_degree: int, cap: int,
                         checkpoint: Optional[Checkpoint], budget: _Budget,
                         samples: Optional[int] = None, seed: Optional[int] = None) -> SearchOutcome:
    presentation = extract_presentation(complex)
    outcome = SearchOutcome(SearchStatus.EXHAUSTED, mode="per-diagonal")
    chosen: List[PermutationRep] = list(checkpoint.chosen) if checkpoint else []
    start = (checkpoint.degree, checkpoint.offset) if checkpoint else (1, 0)

    for diagonal in base.returning:
        if any(kills_diagonal_in_some_lift(complex, rep, diagonal) for rep in chosen):
            continue
        found, position = _find_killing_rep(complex, presentation, diagonal, max_degree, start, budget, outcome)
        start = (1, 0)
        if found is None:
            if position is not None:
                return _interrupted(outcome, complex, "per-diagonal", position[0], position[1], chosen)
            outcome.reason = "max-degree"
            outcome.chosen = chosen
            outcome.checkpoint = Checkpoint("per-diagonal", complex.fingerprint, max_degree + 1, 0,
                                            chosen).encode()
            logger.info(f"No rep up to degree {max_degree} kills diagonal {diagonal.key}")
            return outcome
        chosen.append(found)
        logger.info(f"Diagonal {diagonal.key} killed by a degree-{found.degree} rep")

    common = common_cover(chosen, cap)
    verify_factorization(common, chosen, presentation, samples, seed)
    cover = build_cover(complex, common)
    outcome.status = SearchStatus.FOUND
    outcome.rep = common
    outcome.cover = cover
    outcome.chosen = chosen
    outcome.diagonals = _verify_cover(base, cover)
    logger.info(f"Common regular cover of degree {common.degree} from {len(chosen)} rep(s)")
    return outcome


def _find_killing_rep(complex: PolyhedralComplex, presentation, diagonal: Diagonal, max_degree: int,
                      start: Tuple[int, int], budget: _Budget,
                      outcome: SearchOutcome) -> Tuple[Optional[PermutationRep], Optional[Tuple[int, int]]]:
    for degree in range(start[0], max_degree + 1):
        if degree not in outcome.degrees_tried:
            outcome.degrees_tried.append(degree)
        offset = start[1] if degree == start[0] else 0
        for index, rep in enumerate(enumerate_reps(presentation, degree)):
            if index < offset:
                continue
            if budget.spent:
                return None, (degree, index)
            budget.used += 1
            outcome.reps_tested += 1
            if kills_diagonal_in_some_lift(complex, rep, diagonal):
                return rep, None
    return None, None


def _interrupted(outcome: SearchOutcome, complex: PolyhedralComplex, mode: str, degree: int,
                 offset: int, chosen: List[PermutationRep]) -> SearchOutcome:
    outcome.reason = "budget"
    outcome.chosen = list(chosen)
    outcome.checkpoint = Checkpoint(mode, complex.fingerprint, degree, offset, list(chosen)).encode()
    logger.info(f"Search budget spent at degree {degree}, offset {offset}")
    return outcome


def _verify_cover(base: DiagonalSet, cover: CoverComplex) -> DiagonalSet:
    after = diagonals_after_cover(base, cover, with_witnesses=False)
    problems = []
    if after.returning:
        problems.append(f"{len(after.returning)} returning diagonal(s) remain in the cover")
    violations = monotonicity_violations(base, after)
    if violations:
        problems.append(f"{len(violations)} lift(s) return although their base diagonal does not")
    if problems:
        logger.error(f"Cover verification failed: {problems}")
        raise VerificationError("cover does not kill all returning diagonals", problems)
    return after
