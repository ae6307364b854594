"""
Diagonal sets, returning diagonals and witness words
"""

from .diagonals import (
    Diagonal, DiagonalSet, diagonals_after_cover, enumerate_diagonals, monotonicity_violations,
    replay_witness, witness_word,
)

__all__ = [
    'Diagonal',
    'DiagonalSet',
    'diagonals_after_cover',
    'enumerate_diagonals',
    'monotonicity_violations',
    'replay_witness',
    'witness_word',
]
