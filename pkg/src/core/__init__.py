"""
Core complex representation: face lattices, facet pairings, orbit structure and presentations
"""

from .complex import (
    Crossing, FacetPairing, Partition, Polyhedron, PolyhedralComplex, Provenance,
    ValidationIssue, ValidationReport, VertexTag, euler_characteristic, face_classes,
    fingerprint, link_euler_characteristic, pseudo_euler_characteristic, validate_complex,
    vertex_classes,
)
from .errors import (
    CapExceededError, ComplexError, InputError, PreconditionError, UnsupportedDimensionError,
    ValidationError, VerificationError,
)
from .lattice import FaceLattice
from .presentation import (
    GroupPresentation, RelatorBase, Word, abelianization, extract_presentation, free_reduce,
    cyclic_reduce, invert, parse_word, presentation_from_words, replay_relator, spell,
)
from .union_find import UnionFind

__all__ = [
    'Crossing', 'FacetPairing', 'Partition', 'Polyhedron', 'PolyhedralComplex', 'Provenance',
    'ValidationIssue', 'ValidationReport', 'VertexTag', 'euler_characteristic', 'face_classes',
    'fingerprint', 'link_euler_characteristic', 'pseudo_euler_characteristic', 'validate_complex',
    'vertex_classes',
    'CapExceededError', 'ComplexError', 'InputError', 'PreconditionError',
    'UnsupportedDimensionError', 'ValidationError', 'VerificationError',
    'FaceLattice',
    'GroupPresentation', 'RelatorBase', 'Word', 'abelianization', 'extract_presentation',
    'free_reduce', 'cyclic_reduce', 'invert', 'parse_word', 'presentation_from_words',
    'replay_relator', 'spell',
    'UnionFind',
]
