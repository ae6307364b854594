"""
Exact Euclidean fellows, truncation planes and volumes
"""

from .exact import affine_hyperplane, affine_rank, centroid, dot, minimum_norm_squared, norm_squared, \
    rational_point, signed_volume
from .fellow import (
    CONDITIONS, EuclideanFellow, FellowReport, OrthogonalityReport, TruncationFace, TruncationPlane,
    check_orthogonality, require_valid, truncation_face, truncation_plane, truncation_plane_conflicts,
    validate_fellow,
)
from .volume import GeometricSimplex, VolumeLedger, fellow_volume, folded_facets, realize_subdivision

__all__ = [
    'affine_hyperplane',
    'affine_rank',
    'centroid',
    'dot',
    'minimum_norm_squared',
    'norm_squared',
    'rational_point',
    'signed_volume',
    'CONDITIONS',
    'EuclideanFellow',
    'FellowReport',
    'OrthogonalityReport',
    'TruncationFace',
    'TruncationPlane',
    'check_orthogonality',
    'require_valid',
    'truncation_face',
    'truncation_plane',
    'truncation_plane_conflicts',
    'validate_fellow',
    'GeometricSimplex',
    'VolumeLedger',
    'fellow_volume',
    'folded_facets',
    'realize_subdivision',
]
