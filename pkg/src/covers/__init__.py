"""
Finite covers: permutation representations, low-index enumeration, regularization and search
"""

from .cover_complex import CoverComplex, build_cover, count_returning, kills_diagonal_in_some_lift
from .enumeration import CosetTable, count_reps, enumerate_reps
from .permutation_rep import PermutationRep, disjoint_union
from .regular import (
    common_cover, factorization_failures, regular_image, regularize, sample_words, verify_factorization,
)
from .search import Checkpoint, SearchOutcome, SearchStatus, search_cover_killing_diagonals

__all__ = [
    'CoverComplex',
    'build_cover',
    'count_returning',
    'kills_diagonal_in_some_lift',
    'CosetTable',
    'count_reps',
    'enumerate_reps',
    'PermutationRep',
    'disjoint_union',
    'common_cover',
    'factorization_failures',
    'regular_image',
    'regularize',
    'sample_words',
    'verify_factorization',
    'Checkpoint',
    'SearchOutcome',
    'SearchStatus',
    'search_cover_killing_diagonals',
]
