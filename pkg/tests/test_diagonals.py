import pytest
from dataclasses import replace

from src.core import InputError, PreconditionError, extract_presentation
from src.covers import PermutationRep, build_cover, enumerate_reps
from src.diagonals import (
    DiagonalSet, diagonals_after_cover, enumerate_diagonals, monotonicity_violations, replay_witness, witness_word,
)

from conftest import load_fixture


class TestEnumeration:
    """Test cases for diagonal enumeration."""

    def test_cube_has_no_returning_diagonals(self, cube):
        """Test all 28 vertex pairs of the unglued cube."""
        diagonals = enumerate_diagonals(cube)
        assert diagonals.summary() == {"total": 28, "returning": 0, "non_returning": 28}
        assert diagonals.first_returning is None

    def test_figure_eight_all_returning(self, figure_eight):
        """Test that a single vertex class makes every diagonal return."""
        diagonals = enumerate_diagonals(figure_eight)
        assert len(diagonals) == 12
        assert len(diagonals.returning) == 12

    def test_whitehead_counts(self, whitehead):
        """Test the split of the octahedron's 15 diagonals."""
        diagonals = enumerate_diagonals(whitehead)
        assert len(diagonals) == 15
        assert len(diagonals.returning) == 7

    def test_double_tetrahedron_is_clean(self, double_tetrahedron):
        """Test that four vertex classes leave nothing returning."""
        assert enumerate_diagonals(double_tetrahedron).returning == []

    def test_order_is_deterministic(self, whitehead):
        """Test that diagonals come out by polyhedron then vertex pair."""
        keys = [d.key for d in enumerate_diagonals(whitehead)]
        assert keys == sorted(keys)
        assert all(v < w for _, v, w in keys)

    def test_get_accepts_either_order(self, whitehead):
        """Test lookup by an unordered pair."""
        diagonals = enumerate_diagonals(whitehead)
        assert diagonals.get(0, 4, 1) is diagonals.get(0, 1, 4)

    def test_by_polyhedron(self, figure_eight):
        """Test grouping diagonals per polyhedron."""
        grouped = enumerate_diagonals(figure_eight).by_polyhedron()
        assert {p: len(ds) for p, ds in grouped.items()} == {0: 6, 1: 6}


class TestWitnesses:
    """Test cases for witness words."""

    def test_witnesses_replay(self, whitehead):
        """Test that every witness carries v onto w."""
        for d in enumerate_diagonals(whitehead).returning:
            assert d.witness
            assert replay_witness(whitehead, d.polyhedron, d.v, d.witness) == (d.polyhedron, d.w)

    def test_without_witnesses(self, figure_eight):
        """Test that witnesses can be skipped."""
        diagonals = enumerate_diagonals(figure_eight, with_witnesses=False)
        assert all(d.witness is None for d in diagonals)

    def test_witness_word_matches_enumeration(self, figure_eight):
        """Test the standalone witness query."""
        d = enumerate_diagonals(figure_eight).get(0, 0, 1)
        assert witness_word(figure_eight, d) == d.witness

    def test_witness_for_non_returning(self, double_tetrahedron):
        """Test that only returning diagonals have witnesses."""
        d = enumerate_diagonals(double_tetrahedron).get(0, 0, 1)
        with pytest.raises(PreconditionError):
            witness_word(double_tetrahedron, d)

    def test_replay_rejects_inapplicable_letter(self, figure_eight):
        """Test that a letter leaving through a facet missing the vertex fails."""
        # generator 1 leaves polyhedron 0 through facet [1, 2, 3]
        assert replay_witness(figure_eight, 0, 0, (1,)) is None

    def test_to_dict_spells_witness(self, whitehead):
        """Test the machine-readable form of a returning diagonal."""
        d = enumerate_diagonals(whitehead).first_returning
        record = d.to_dict()
        assert record["returning"] is True
        assert record["vertices"] == [d.v, d.w]
        assert isinstance(record["witness"], str)


class TestCovers:
    """Test cases for diagonals of covers."""

    def test_cover_diagonals_project(self, whitehead):
        """Test that cover diagonals are tagged with their base diagonal."""
        base = enumerate_diagonals(whitehead)
        rep = PermutationRep.from_cycles(2, ["()", "()", "(0 1)", "(0 1)"])
        after = diagonals_after_cover(base, build_cover(whitehead, rep))
        assert len(after) == 30
        assert after.base_fingerprint == base.fingerprint
        assert all(d.base == (0, d.v, d.w) for d in after)

    def test_returning_never_appears(self, whitehead):
        """Test that covers cannot create returning diagonals."""
        base = enumerate_diagonals(whitehead)
        rep = PermutationRep.from_cycles(2, ["()", "()", "(0 1)", "(0 1)"])
        after = diagonals_after_cover(base, build_cover(whitehead, rep))
        assert monotonicity_violations(base, after) == []

    def test_mismatched_base(self, whitehead, figure_eight):
        """Test that the diagonal set must belong to the cover's base."""
        rep = PermutationRep.trivial(4, 1)
        with pytest.raises(InputError):
            diagonals_after_cover(enumerate_diagonals(figure_eight), build_cover(whitehead, rep))

    @pytest.mark.parametrize("name, max_degree", [("whitehead", 3), ("figure_eight", 3), ("torus_square", 4)])
    def test_monotone_for_every_small_cover(self, name, max_degree):
        """Test that no cover of small degree turns a non-returning diagonal into a returning one."""
        complex = load_fixture(name)
        base = enumerate_diagonals(complex, with_witnesses=False)
        presentation = extract_presentation(complex)
        for degree in range(1, max_degree + 1):
            for rep in enumerate_reps(presentation, degree):
                after = diagonals_after_cover(base, build_cover(complex, rep), with_witnesses=False)
                assert monotonicity_violations(base, after) == []
                assert len(after) == degree * len(base)
                assert len(after.returning) <= degree * len(base.returning)

    def test_violation_detected(self, whitehead):
        """Test that a cover diagonal returning over a non-returning base is reported."""
        base = enumerate_diagonals(whitehead, with_witnesses=False)
        rep = PermutationRep.from_cycles(2, ["()", "()", "(0 1)", "(0 1)"])
        after = diagonals_after_cover(base, build_cover(whitehead, rep), with_witnesses=False)
        target = next(d for d in after if not base.get(*d.base).returning)
        forged = DiagonalSet(
            [replace(d, returning=True) if d.key == target.key else d for d in after],
            after.fingerprint, base_fingerprint=after.base_fingerprint,
        )
        assert [d.key for d in monotonicity_violations(base, forged)] == [target.key]
