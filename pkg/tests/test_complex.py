import pytest
import dataclasses

from src.core import (
    FacetPairing, FaceLattice, PolyhedralComplex, UnionFind, euler_characteristic, face_classes,
    fingerprint, link_euler_characteristic, pseudo_euler_characteristic, validate_complex, vertex_classes,
)
from src.covers import PermutationRep, build_cover

from conftest import doubled, load_fixture, polygon, polytope, prism


class TestUnionFind:
    """Test cases for the union-find helper."""

    def test_classes_are_sorted_by_smallest_member(self):
        """Test that classes come out in a deterministic order."""
        uf = UnionFind([5, 3, 1, 4])
        uf.union(5, 1)
        uf.union(4, 3)
        assert uf.classes() == [(1, 5), (3, 4)]

    def test_connected(self):
        """Test connectivity queries after unions."""
        uf = UnionFind(range(4))
        uf.union(0, 1)
        uf.union(1, 2)
        assert uf.connected(0, 2)
        assert not uf.connected(0, 3)


class TestFaceLattice:
    """Test cases for face lattices built from facets."""

    def test_cube_face_counts(self, cube):
        """Test the f-vector of the cube."""
        lattice = cube.polyhedra[0].lattice
        assert [len(lattice.faces[k]) for k in range(4)] == [8, 12, 6, 1]
        assert lattice.problems() == []

    def test_octahedron_face_counts(self, octahedron):
        """Test the f-vector of the octahedron."""
        lattice = octahedron.polyhedra[0].lattice
        assert [len(lattice.faces[k]) for k in range(4)] == [6, 12, 8, 1]

    def test_polygon_is_two_dimensional(self):
        """Test that a hexagon has rank 2 with six edges."""
        n, facets = polygon(6)
        lattice = FaceLattice.from_facets(n, facets)
        assert lattice.dim == 2
        assert len(lattice.facets) == 6

    def test_subfaces_of_vertex_is_empty_face(self, cube):
        """Test that the only subface of a vertex is the empty face."""
        lattice = cube.polyhedra[0].lattice
        assert lattice.subfaces(frozenset({0})) == [frozenset()]

    def test_restrict_to_facet(self):
        """Test restricting a prism lattice to a square facet."""
        n, facets = prism(polygon(3))
        lattice = FaceLattice.from_facets(n, facets)
        square = frozenset(facets[2])
        sub = lattice.restrict(square)
        assert sub.dim == 2
        assert len(sub.faces[0]) == 4 and len(sub.faces[1]) == 4

    def test_non_polytope_reports_problems(self):
        """Test that two triangles sharing a vertex are not a polygon lattice."""
        lattice = FaceLattice.from_facets(4, [(0, 1, 2), (0, 1, 3)])
        assert lattice.problems()


class TestValidation:
    """Test cases for complex validation."""

    def test_cube_free_boundary_is_clean(self, cube):
        """Test that the unglued cube validates in free-boundary mode."""
        report = validate_complex(cube)
        assert report.clean
        assert report.status == "clean-with-free-boundary"
        assert len(report.unpaired) == 6

    def test_cube_without_free_boundary_reports_unpaired(self, cube):
        """Test that unpaired facets are errors for a closed complex."""
        closed = PolyhedralComplex(cube.dim, cube.polyhedra, [], free_boundary=False)
        report = validate_complex(closed)
        assert not report.clean
        assert {issue.code for issue in report.issues} == {"unpaired-facet"}

    @pytest.mark.parametrize("name", ["figure_eight", "whitehead", "double_tetrahedron", "double_truncated",
                                      "torus_square"])
    def test_closed_fixtures_are_clean(self, name):
        """Test that every closed fixture validates cleanly."""
        report = validate_complex(load_fixture(name))
        assert report.status == "clean"

    def test_non_bijective_pairing(self, figure_eight):
        """Test that a map sending two vertices to one target is rejected."""
        bad = FacetPairing((0, 0), (1, 0), ((1, 1), (2, 1), (3, 2)))
        complex = PolyhedralComplex(3, figure_eight.polyhedra, (bad,) + figure_eight.pairings[1:])
        report = validate_complex(complex)
        assert "non-bijective pairing" in {issue.code for issue in report.issues}

    def test_non_isomorphic_pairing(self, cube):
        """Test that a vertex map not preserving square edges is rejected."""
        # facet 0 = [0, 2, 4, 6], facet 1 = [1, 3, 5, 7]; 0-2 is an edge but 1-7 is a diagonal
        twisted = FacetPairing((0, 0), (0, 1), ((0, 1), (2, 7), (4, 5), (6, 3)))
        complex = PolyhedralComplex(3, cube.polyhedra, [twisted], free_boundary=True)
        report = validate_complex(complex)
        assert "non-isomorphic pairing" in {issue.code for issue in report.issues}

    def test_tag_mismatch(self, double_truncated):
        """Test that ideal vertices cannot be glued to hyperideal ones."""
        bad = FacetPairing((0, 0), (1, 0), ((1, 3), (2, 2), (3, 1)))
        complex = PolyhedralComplex(3, double_truncated.polyhedra, (bad,) + double_truncated.pairings[1:])
        report = validate_complex(complex)
        assert "tag-mismatch" in {issue.code for issue in report.issues}

    def test_facet_used_twice(self, figure_eight):
        """Test that a facet may belong to one pairing only."""
        extra = FacetPairing((0, 0), (1, 1), ((1, 0), (2, 2), (3, 3)))
        complex = PolyhedralComplex(3, figure_eight.polyhedra, figure_eight.pairings + (extra,))
        report = validate_complex(complex)
        assert "facet-reused" in {issue.code for issue in report.issues}

    def test_dangling_facet_reference(self, figure_eight):
        """Test that pairings must name existing facets."""
        bad = FacetPairing((0, 9), (1, 0), ((1, 1), (2, 3), (3, 2)))
        complex = PolyhedralComplex(3, figure_eight.polyhedra, (bad,) + figure_eight.pairings[1:])
        report = validate_complex(complex)
        assert "dangling-facet" in {issue.code for issue in report.issues}

    def test_report_to_dict(self, cube):
        """Test the machine-readable form of a validation report."""
        record = validate_complex(cube).to_dict()
        assert record["status"] == "clean-with-free-boundary"
        assert record["issues"] == []
        assert [0, 0] in record["unpaired"]


class TestClasses:
    """Test cases for vertex and face classes."""

    def test_cube_has_singleton_vertex_classes(self, cube):
        """Test that an unglued cube has eight vertex classes."""
        partition = vertex_classes(cube)
        assert len(partition) == 8
        assert all(len(members) == 1 for members in partition.classes)

    def test_figure_eight_has_one_vertex_class(self, figure_eight):
        """Test that the figure-eight pattern identifies all eight vertices."""
        partition = vertex_classes(figure_eight)
        assert len(partition) == 1
        assert len(partition.classes[0]) == 8

    def test_figure_eight_edge_classes(self, figure_eight):
        """Test two edge classes of six edges each."""
        edges = face_classes(figure_eight, 1)
        assert len(edges) == 2
        assert sorted(len(c) for c in edges.classes) == [6, 6]

    def test_figure_eight_face_classes(self, figure_eight):
        """Test that the four pairings give four face classes."""
        assert len(face_classes(figure_eight, 2)) == 4

    def test_whitehead_has_two_vertex_classes(self, whitehead):
        """Test that the Whitehead pattern has two cusps."""
        partition = vertex_classes(whitehead)
        assert len(partition) == 2
        assert sorted(len(c) for c in partition.classes) == [2, 4]

    def test_classes_numbered_by_smallest_member(self, whitehead):
        """Test the deterministic numbering of classes."""
        partition = vertex_classes(whitehead)
        assert partition.class_of((0, 0)) == 0

    def test_face_classes_rank_out_of_range(self, cube):
        """Test that a rank outside the complex is rejected."""
        with pytest.raises(ValueError):
            face_classes(cube, 4)


class TestEulerCharacteristic:
    """Test cases for Euler characteristics."""

    def test_cube(self, cube):
        """Test 8 - 12 + 6 - 1 for the unglued cube."""
        assert pseudo_euler_characteristic(cube) == 1
        assert euler_characteristic(cube) == 1

    def test_figure_eight(self, figure_eight):
        """Test that the cusped manifold has Euler characteristic zero."""
        assert pseudo_euler_characteristic(figure_eight) == 1
        assert euler_characteristic(figure_eight) == 0

    def test_figure_eight_cusp_link_is_torus(self, figure_eight):
        """Test that the vertex link is a torus."""
        assert link_euler_characteristic(figure_eight, 0) == 0

    def test_whitehead(self, whitehead):
        """Test the two-cusped Whitehead pattern."""
        assert euler_characteristic(whitehead) == 0
        assert [link_euler_characteristic(whitehead, c) for c in range(2)] == [0, 0]

    def test_punctured_torus(self, torus_square):
        """Test the square torus minus its vertex."""
        assert pseudo_euler_characteristic(torus_square) == 0
        assert euler_characteristic(torus_square) == -1

    def test_doubled_polytope_is_a_sphere(self):
        """Test that gluing two prisms by the identity gives a 3-sphere."""
        n, facets = prism(polygon(5))
        complex = doubled(n, facets)
        assert pseudo_euler_characteristic(complex) == 0

    def test_multiplicative_under_covers(self, whitehead):
        """Test that a degree-2 cover doubles the Euler characteristic."""
        rep = PermutationRep.from_cycles(2, ["()", "()", "(0 1)", "(0 1)"])
        cover = build_cover(whitehead, rep)
        assert euler_characteristic(cover.total) == 2 * euler_characteristic(whitehead)


class TestFingerprint:
    """Test cases for complex fingerprints."""

    def test_labels_do_not_matter(self, figure_eight):
        """Test that renaming polyhedra keeps the fingerprint."""
        renamed = PolyhedralComplex(
            3, [dataclasses.replace(p, label="X") for p in figure_eight.polyhedra], figure_eight.pairings,
            label="other",
        )
        assert fingerprint(renamed) == fingerprint(figure_eight)

    def test_gluing_matters(self, figure_eight, double_tetrahedron):
        """Test that different gluings give different fingerprints."""
        assert fingerprint(figure_eight) != fingerprint(
            PolyhedralComplex(3, figure_eight.polyhedra, double_tetrahedron.pairings)
        )

    def test_polytope_helper_builds_valid_complex(self):
        """Test that a doubled pentagonal prism validates."""
        n, facets = prism(polygon(5))
        assert polytope(n, facets).dim == 3
        assert validate_complex(doubled(n, facets)).clean
