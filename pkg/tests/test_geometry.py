import pytest
import random

from sympy import Rational

from src.core import PreconditionError, ValidationError, VerificationError, VertexTag
from src.geometry import (
    EuclideanFellow, GeometricSimplex, TruncationPlane, affine_rank, check_orthogonality, fellow_volume,
    folded_facets, minimum_norm_squared, realize_subdivision, require_valid, signed_volume, truncation_face,
    truncation_plane, truncation_plane_conflicts, validate_fellow,
)

IDEAL, HYPERIDEAL = VertexTag.IDEAL, VertexTag.HYPERIDEAL
TETRAHEDRON_FACETS = [(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)]
TRIANGLE_FACETS = [(0, 1), (1, 2), (0, 2)]
SQUARE_FACETS = [(0, 1), (1, 2), (2, 3), (0, 3)]


def sphere_point(s: Rational, t: Rational):
    """Rational point on the unit 2-sphere by inverse stereographic projection."""
    d = 1 + s * s + t * t
    return (2 * s / d, 2 * t / d, (s * s + t * t - 1) / d)


class TestValidation:
    """Test cases for fellow validation."""

    def test_hyperideal_triangle_is_valid(self, hyperideal_triangle):
        """Test a triangle with one hyperideal and two ideal vertices."""
        f = EuclideanFellow.from_polyhedron(hyperideal_triangle.polyhedra[0])
        report = validate_fellow(f)
        assert report.clean
        assert report.flags == []

    def test_double_truncated_is_valid(self, double_truncated):
        """Test both tetrahedra of the partially truncated fixture."""
        for poly in double_truncated.polyhedra:
            assert validate_fellow(EuclideanFellow.from_polyhedron(poly)).clean

    def test_octahedron_is_valid(self, octahedron):
        """Test the regular ideal octahedron."""
        assert validate_fellow(EuclideanFellow.from_polyhedron(octahedron.polyhedra[0])).clean

    def test_ideal_vertex_off_sphere(self):
        """Test that ideal vertices must lie on the sphere."""
        f = EuclideanFellow.build([(Rational(1, 2), 0), (0, 1), (0, -1)], [IDEAL] * 3, TRIANGLE_FACETS)
        report = validate_fellow(f)
        assert not report.passed("ideal")
        assert report.passed("convex")

    def test_hyperideal_vertex_inside_ball(self):
        """Test that hyperideal vertices must lie outside the closed ball."""
        f = EuclideanFellow.build([(1, 0), (0, 1), (0, -1)], [HYPERIDEAL, IDEAL, IDEAL], TRIANGLE_FACETS)
        assert not validate_fellow(f).passed("hyperideal")

    def test_edge_missing_ball(self):
        """Test that an edge between two far hyperideal vertices violates the codimension-2 condition."""
        f = EuclideanFellow.build(
            [(2, 0, 0), (2, 1, 0), (0, 0, 1), (0, 0, -1)],
            [HYPERIDEAL, HYPERIDEAL, IDEAL, IDEAL], TETRAHEDRON_FACETS,
        )
        report = validate_fellow(f)
        assert report.passed("convex")
        assert not report.passed("codim2")
        assert "[0, 1]" in report.violations["codim2"][0]

    def test_non_supporting_facet(self):
        """Test that a facet with vertices on both sides is rejected."""
        # facets name the two diagonals of the square
        f = EuclideanFellow.build([(1, 0), (0, 1), (-1, 0), (0, -1)], [IDEAL] * 4,
                                  [(0, 2), (1, 2), (1, 3), (0, 3)])
        assert not validate_fellow(f).passed("convex")

    def test_wrong_component_count(self):
        """Test that coordinates must match the dimension."""
        f = EuclideanFellow.build([(1, 0, 0), (0, 1, 0), (0, -1, 0)], [IDEAL] * 3, TRIANGLE_FACETS)
        assert validate_fellow(f).violations["convex"] == ["coordinates must have 2 components"]

    def test_require_valid_raises_with_report(self):
        """Test that failures carry the full report."""
        f = EuclideanFellow.build([(Rational(1, 2), 0), (0, 1), (0, -1)], [IDEAL] * 3, TRIANGLE_FACETS)
        with pytest.raises(ValidationError) as info:
            require_valid(f)
        assert not info.value.report.passed("ideal")

    def test_require_subset_of_conditions(self):
        """Test checking convexity alone."""
        f = EuclideanFellow.build([(Rational(1, 2), 0), (0, 1), (0, -1)], [IDEAL] * 3, TRIANGLE_FACETS)
        assert require_valid(f, ("convex",)).passed("convex")

    def test_no_coordinates(self, figure_eight):
        """Test that combinatorial polyhedra have no fellow."""
        with pytest.raises(PreconditionError):
            EuclideanFellow.from_polyhedron(figure_eight.polyhedra[0])

    def test_report_to_dict(self, hyperideal_triangle):
        """Test the machine-readable form of a fellow report."""
        record = validate_fellow(EuclideanFellow.from_polyhedron(hyperideal_triangle.polyhedra[0])).to_dict()
        assert record["clean"] is True
        assert set(record["conditions"]) == {"ideal", "hyperideal", "convex", "codim2"}


class TestTruncation:
    """Test cases for truncation planes and faces."""

    def test_plane_of_axis_point(self):
        """Test that (2, 0, 0) is truncated by the plane x1 = 1/2."""
        plane = truncation_plane((2, 0, 0))
        assert plane.contains((Rational(1, 2), 5, -3))
        assert not plane.contains((1, 0, 0))
        assert plane.separates_origin_from_pole()
        assert str(plane) == "2*x1 = 1"

    def test_plane_needs_hyperideal_point(self):
        """Test that points on the sphere have no truncation plane."""
        with pytest.raises(PreconditionError):
            truncation_plane((1, 0))

    def test_tangency(self):
        """Test that the plane meets the sphere where chords from the pole are tangent."""
        v = (Rational(5, 4), 0)
        x = (Rational(4, 5), Rational(3, 5))
        assert truncation_plane(v).contains(x)
        assert TruncationPlane.tangency_residual(x, v) == 0
        assert TruncationPlane.tangency_residual((0, 1), v) == 1

    def test_truncation_face(self, hyperideal_triangle):
        """Test where the edges at the hyperideal vertex cross its plane."""
        f = EuclideanFellow.from_polyhedron(hyperideal_triangle.polyhedra[0])
        face = truncation_face(f, 0)
        assert face.lateral_facets == [0, 2]
        assert face.edge_points == {
            1: (Rational(1, 2), Rational(3, 4)),
            2: (Rational(1, 2), Rational(-3, 4)),
        }
        assert all(face.plane.contains(p) for p in face.edge_points.values())

    def test_truncation_face_at_ideal_vertex(self, hyperideal_triangle):
        """Test that only hyperideal vertices are truncated."""
        f = EuclideanFellow.from_polyhedron(hyperideal_triangle.polyhedra[0])
        with pytest.raises(PreconditionError):
            truncation_face(f, 1)

    def test_conflicting_planes(self):
        """Test two truncation planes meeting at (1/2, 1/2) inside the disc."""
        f = EuclideanFellow.build([(2, 0), (0, 2), (-1, 0)], [HYPERIDEAL, HYPERIDEAL, IDEAL], TRIANGLE_FACETS)
        assert truncation_plane_conflicts(f) == [(0, 1)]
        report = validate_fellow(f)
        assert report.flags
        assert report.passed("hyperideal")

    def test_no_conflicts_in_fixture(self, double_truncated):
        """Test that the fixture's three truncation planes are disjoint in the ball."""
        f = EuclideanFellow.from_polyhedron(double_truncated.polyhedra[0])
        assert truncation_plane_conflicts(f) == []


class TestOrthogonality:
    """Test cases for orthogonality of truncation planes and lateral facets."""

    def test_triangle(self, hyperideal_triangle):
        """Test both sides through the hyperideal vertex."""
        f = EuclideanFellow.from_polyhedron(hyperideal_triangle.polyhedra[0])
        report = check_orthogonality(f)
        assert [(e.vertex, e.facet) for e in report.entries] == [(0, 0), (0, 2)]
        assert report.passed

    def test_partially_truncated_tetrahedron(self, double_truncated):
        """Test three facets at each of the three hyperideal vertices."""
        report = check_orthogonality(EuclideanFellow.from_polyhedron(double_truncated.polyhedra[0]))
        assert len(report.entries) == 9
        assert all(e.residual == 0 for e in report.entries)
        assert report.to_dict()["passed"] is True

    def test_facet_through_origin(self):
        """Test that a facet plane through the origin is reported as degenerate."""
        f = EuclideanFellow.build([(2, 0), (-1, 0), (0, -1)], [HYPERIDEAL, IDEAL, IDEAL], TRIANGLE_FACETS)
        report = check_orthogonality(f)
        assert [(e.vertex, e.facet) for e in report.degenerate] == [(0, 0)]
        assert not report.passed

    def test_invalid_fellow_is_refused(self):
        """Test that orthogonality is only checked on valid fellows."""
        f = EuclideanFellow.build([(1, 0), (0, 1), (0, -1)], [HYPERIDEAL, IDEAL, IDEAL], TRIANGLE_FACETS)
        with pytest.raises(ValidationError):
            check_orthogonality(f)


class TestVolume:
    """Test cases for exact volumes."""

    def test_cube(self, cube):
        """Test the unit cube."""
        assert fellow_volume(EuclideanFellow.from_polyhedron(cube.polyhedra[0])) == 1

    def test_octahedron(self, octahedron):
        """Test the octahedron with vertices at the unit axis points."""
        assert fellow_volume(EuclideanFellow.from_polyhedron(octahedron.polyhedra[0])) == Rational(4, 3)

    def test_tetrahedron(self, double_tetrahedron):
        """Test that the flag decomposition agrees with the determinant."""
        f = EuclideanFellow.from_polyhedron(double_tetrahedron.polyhedra[0])
        assert fellow_volume(f) == Rational(1, 3)
        assert abs(signed_volume(f.coords)) == Rational(1, 3)

    def test_realize_square(self):
        """Test both diagonal splittings of the unit square."""
        f = EuclideanFellow.build([(0, 0), (1, 0), (1, 1), (0, 1)], [IDEAL] * 4, SQUARE_FACETS)
        assert realize_subdivision(f, [(0, 1, 2), (0, 2, 3)]).balanced
        ledger = realize_subdivision(f, [(0, 1, 3), (1, 2, 3)])
        assert ledger.total == 1
        assert ledger.to_dict()["total"] == "1"

    def test_realize_rejects_overlap(self, double_tetrahedron):
        """Test that counting a simplex twice breaks the volume balance."""
        f = EuclideanFellow.from_polyhedron(double_tetrahedron.polyhedra[0])
        with pytest.raises(VerificationError) as info:
            realize_subdivision(f, [(0, 1, 2, 3), (0, 1, 2, 3)])
        assert "sum to 2/3" in info.value.reasons[0]

    def test_realize_rejects_fold(self):
        """Test that two triangles on one side of their common edge are caught even when the areas balance."""
        f = EuclideanFellow.build([(0, 0), (1, 0), (1, 1), (0, 1)], [IDEAL] * 4, SQUARE_FACETS)
        with pytest.raises(VerificationError) as info:
            realize_subdivision(f, [(0, 1, 2), (0, 1, 3)])
        assert info.value.reasons == ["simplices [0, 1, 2] and [0, 1, 3] fold over facet [0, 1]"]

    def test_fold_check_ignores_vertex_order(self, octahedron):
        """Test that listing simplex vertices in any order keeps a proper subdivision clean."""
        f = EuclideanFellow.from_polyhedron(octahedron.polyhedra[0])
        tetrahedra = [(0, 2, 4, 1), (2, 0, 3, 4), (0, 3, 5, 2), (5, 2, 1, 0)]
        simplices = [GeometricSimplex(t, tuple(f.coords[v] for v in t), signed_volume([f.coords[v] for v in t]))
                     for t in tetrahedra]
        assert folded_facets(simplices) == []
        assert any("shared by 3" in problem for problem in folded_facets(simplices + simplices[:1]))

    def test_realize_rejects_degenerate(self):
        """Test that a flat simplex is reported."""
        f = EuclideanFellow.build([(0, 0), (1, 0), (1, 1), (0, 1)], [IDEAL] * 4, SQUARE_FACETS)
        with pytest.raises(VerificationError) as info:
            realize_subdivision(f, [(0, 1, 2), (0, 2, 3), (0, 0, 2)])
        assert any("degenerate" in reason for reason in info.value.reasons)

    def test_realize_rejects_wrong_arity(self):
        """Test that simplices need dim + 1 vertices."""
        f = EuclideanFellow.build([(0, 0), (1, 0), (1, 1), (0, 1)], [IDEAL] * 4, SQUARE_FACETS)
        with pytest.raises(VerificationError):
            realize_subdivision(f, [(0, 1, 2, 3)])

    def test_minimum_norm_of_chord(self):
        """Test the distance from the origin to a segment."""
        assert minimum_norm_squared([(1, 1), (1, -1)]) == 1
        assert minimum_norm_squared([(2, 0, 0), (2, 1, 0)]) == 4


@pytest.mark.slow
class TestRandomFellows:
    """Randomized checks on rational ideal tetrahedra."""

    def test_ideal_tetrahedra(self):
        """Test a thousand random configurations of four rational sphere points."""
        rng = random.Random(7)
        checked = 0
        for _ in range(1000):
            coords = [
                sphere_point(Rational(rng.randint(-9, 9), rng.randint(1, 5)),
                             Rational(rng.randint(-9, 9), rng.randint(1, 5)))
                for _ in range(4)
            ]
            if len(set(coords)) < 4 or affine_rank(coords) < 3:
                continue
            f = EuclideanFellow.build(coords, [IDEAL] * 4, TETRAHEDRON_FACETS)
            assert validate_fellow(f).clean
            assert fellow_volume(f) == abs(signed_volume(coords))
            checked += 1
        assert checked > 900

    def test_hyperideal_scaling(self):
        """Test that pushing a vertex outward yields a truncation face on its plane."""
        rng = random.Random(11)
        for _ in range(200):
            coords = [sphere_point(Rational(rng.randint(-6, 6), rng.randint(1, 3)),
                                   Rational(rng.randint(-6, 6), rng.randint(1, 3))) for _ in range(4)]
            if len(set(coords)) < 4 or affine_rank(coords) < 3:
                continue
            scale = Rational(rng.randint(11, 15), 10)
            coords[0] = tuple(scale * c for c in coords[0])
            if affine_rank(coords) < 3:
                continue
            f = EuclideanFellow.build(coords, [HYPERIDEAL, IDEAL, IDEAL, IDEAL], TETRAHEDRON_FACETS)
            assert validate_fellow(f).passed("hyperideal")
            face = truncation_face(f, 0)
            assert face.lateral_facets == [1, 2, 3]
            assert all(face.plane.contains(p) for p in face.edge_points.values())
