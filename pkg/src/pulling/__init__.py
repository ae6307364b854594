"""
Pulling construction: vertex orderings, iterated coning and triangulation certificates
"""

from .cells import EMPTY, Cell, cone, from_lattice, pull, simplex_cell
from .ordering import VertexOrdering, order_vertices, parse_order_spec
from .subdivision import SubdivisionState, audit_stage, cone_subdivide, subdivision_stages
from .triangulation import Triangulation, subdivide_complex
from .verification import Certificate, verify_triangulation

__all__ = [
    'EMPTY',
    'Cell',
    'cone',
    'from_lattice',
    'pull',
    'simplex_cell',
    'VertexOrdering',
    'order_vertices',
    'parse_order_spec',
    'SubdivisionState',
    'audit_stage',
    'cone_subdivide',
    'subdivision_stages',
    'Triangulation',
    'subdivide_complex',
    'Certificate',
    'verify_triangulation',
]
