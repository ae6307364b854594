import pytest

from src.core import (
    ComplexError, GroupPresentation, InputError, PreconditionError, UnsupportedDimensionError, abelianization,
    cyclic_reduce, extract_presentation, free_reduce, invert, parse_word, presentation_from_words,
    replay_relator, spell,
)
from src.core.presentation import exponent_matrix

from conftest import load_fixture


class TestWords:
    """Test cases for word helpers."""

    def test_spell_and_parse(self):
        """Test letters for generators and their inverses."""
        assert spell((1, -2, 3)) == "aBc"
        assert parse_word("aBc") == (1, -2, 3)
        assert spell(()) == "1"
        assert parse_word("1") == ()

    def test_spell_large_generator(self):
        """Test the fallback spelling past the alphabet."""
        assert spell((27, -27)) == "x27X27"

    def test_parse_rejects_digits(self):
        """Test that unknown characters are an input error."""
        with pytest.raises(InputError):
            parse_word("a2")

    def test_free_reduce(self):
        """Test cancelling adjacent inverse letters."""
        assert free_reduce((1, 2, -2, -1, 3)) == (3,)

    def test_cyclic_reduce(self):
        """Test cancelling letters across the ends."""
        assert cyclic_reduce((2, 1, 3, -2)) == (1, 3)

    def test_invert(self):
        """Test reversing and negating a word."""
        assert invert((1, -2, 3)) == (-3, 2, -1)


class TestExtraction:
    """Test cases for presentation extraction."""

    def test_torus_relator(self, torus_square):
        """Test the commutator relator of the square torus."""
        presentation = extract_presentation(torus_square)
        assert presentation.num_generators == 2
        assert [spell(r) for r in presentation.relators] == ["aBAb"]
        assert presentation.tree_relators == ()

    def test_figure_eight_shape(self, figure_eight):
        """Test generator and relator counts of the figure-eight pattern."""
        presentation = extract_presentation(figure_eight)
        assert presentation.num_generators == 4
        assert len(presentation.relators) == 2
        assert presentation.tree_relators == ((1,),)
        assert all(len(r) == 6 for r in presentation.relators)

    def test_figure_eight_homology(self, figure_eight):
        """Test that the first homology is infinite cyclic."""
        assert abelianization(extract_presentation(figure_eight)) == (1, [])

    def test_whitehead_homology(self, whitehead):
        """Test that the two-cusped pattern has rank-two homology."""
        assert abelianization(extract_presentation(whitehead)) == (2, [])

    def test_torus_homology(self, torus_square):
        """Test that the punctured torus has free abelianization of rank two."""
        assert abelianization(extract_presentation(torus_square)) == (2, [])

    @pytest.mark.parametrize("name", ["figure_eight", "whitehead", "torus_square", "double_tetrahedron"])
    def test_relators_replay(self, name):
        """Test that every relator closes up when walked again."""
        complex = load_fixture(name)
        presentation = extract_presentation(complex)
        assert all(replay_relator(complex, presentation, i) for i in range(len(presentation.relators)))

    def test_free_boundary_is_rejected(self, cube):
        """Test that an unpaired complex has no presentation."""
        with pytest.raises(PreconditionError):
            extract_presentation(cube)

    def test_unsupported_dimension(self, figure_eight):
        """Test that only dimensions two and three are supported."""
        from src.core import PolyhedralComplex
        odd = PolyhedralComplex(4, figure_eight.polyhedra, figure_eight.pairings)
        with pytest.raises(UnsupportedDimensionError) as info:
            extract_presentation(odd)
        assert isinstance(info.value, ComplexError)
        assert UnsupportedDimensionError.__doc__.startswith("The operation is not implemented")

    def test_result_is_cached(self, figure_eight):
        """Test that extraction runs once per complex."""
        assert extract_presentation(figure_eight) is extract_presentation(figure_eight)

    def test_fingerprint_is_stable(self, figure_eight):
        """Test that two loads give the same presentation fingerprint."""
        again = load_fixture("figure_eight")
        assert extract_presentation(figure_eight).fingerprint == extract_presentation(again).fingerprint


class TestAbelianization:
    """Test cases for abelian invariants."""

    def test_torsion(self):
        """Test a cyclic group of order six."""
        assert abelianization(presentation_from_words(1, ["aaaaaa"])) == (0, [6])

    def test_mixed(self):
        """Test Z x Z/2 from two generators."""
        assert abelianization(presentation_from_words(2, ["bb"])) == (1, [2])

    def test_free_group(self):
        """Test a presentation without relators."""
        assert abelianization(GroupPresentation(3, ())) == (3, [])

    def test_exponent_matrix_includes_tree_relators(self):
        """Test one row per relator with signed exponent sums."""
        presentation = presentation_from_words(2, ["aBAb"], ["a"])
        assert exponent_matrix(presentation) == [[0, 0], [1, 0]]

    def test_to_dict(self, torus_square):
        """Test the machine-readable form of a presentation."""
        record = extract_presentation(torus_square).to_dict()
        assert record == {"generators": ["a", "b"], "relators": ["aBAb"], "tree_relators": []}
