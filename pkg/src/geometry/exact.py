"""Exact rational predicates. No tolerance appears anywhere."""

from itertools import combinations
from math import factorial
from typing import Iterable, Optional, Sequence, Tuple

from sympy import Matrix, Rational

Point = Tuple[Rational, ...]


def rational_point(values: Iterable) -> Point:
    return tuple(Rational(v) for v in values)


def dot(a: Sequence, b: Sequence) -> Rational:
    return sum((Rational(x) * Rational(y) for x, y in zip(a, b)), Rational(0))


def norm_squared(a: Sequence) -> Rational:
    return dot(a, a)


def subtract(a: Sequence, b: Sequence) -> Point:
    return tuple(Rational(x) - Rational(y) for x, y in zip(a, b))


def centroid(points: Sequence[Sequence]) -> Point:
    n = len(points)
    return tuple(sum((Rational(p[i]) for p in points), Rational(0)) / n for i in range(len(points[0])))


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull."""
    return Matrix([[*p, 1] for p in points]).rank() - 1


def affine_hyperplane(points: Sequence[Sequence]) -> Optional[Tuple[Point, Rational]]:
    """``(a, b)`` with ``<a, x> + b = 0`` on every point, or None when the
    points do not span a unique hyperplane."""
    null = Matrix([[*p, 1] for p in points]).nullspace()
    if len(null) != 1:
        return None
    vector = null[0]
    n = len(points[0])
    return tuple(Rational(vector[i]) for i in range(n)), Rational(vector[n])


def signed_volume(points: Sequence[Sequence]) -> Rational:
    """Signed volume of the simplex with the given n+1 vertices in R^n."""
    origin = points[0]
    n = len(origin)
    rows = [subtract(p, origin) for p in points[1:]]
    return Rational(Matrix(rows).det()) / factorial(n)


def minimum_norm_squared(points: Sequence[Sequence]) -> Rational:
    """Exact minimum of |x|^2 over the convex hull of ``points``.

    The minimizer lies in the relative interior of the hull of some affinely
    independent subset, where it is the projection of the origin onto that
    subset's affine hull. Every subset is tried and only projections with
    non-negative barycentric coordinates are kept.
    """
    pts = [rational_point(p) for p in points]
    n = len(pts[0])
    best = min(norm_squared(p) for p in pts)
    for size in range(2, min(len(pts), n + 1) + 1):
        for subset in combinations(pts, size):
            base = subset[0]
            diffs = Matrix([subtract(p, base) for p in subset[1:]])
            if diffs.rank() != size - 1:
                continue
            gram = diffs * diffs.T
            rhs = -(diffs * Matrix(base))
            lam = gram.LUsolve(rhs)
            weights = [Rational(1) - sum(lam)] + [Rational(x) for x in lam]
            if any(w < 0 for w in weights):
                continue
            x = Matrix(base) + diffs.T * lam
            value = Rational((x.T * x)[0, 0])
            if value < best:
                best = value
    return best
