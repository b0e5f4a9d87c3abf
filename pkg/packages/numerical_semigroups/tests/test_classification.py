"""Tests for symmetry classification and complete-intersection detection."""

from __future__ import annotations

import pytest

from numerical_semigroups.core.base import SymmetryClass
from numerical_semigroups.core.presentation import minimal_relation_count
from numerical_semigroups.core.semigroup import new_semigroup
from numerical_semigroups.services.classification import (
    SemigroupClass,
    classify,
    gluing_splits,
    is_complete_intersection,
)
from numerical_semigroups.tests.golden import (
    BRESINSKY_ODD,
    PSEUDO_SYMMETRIC,
    TYPE_THREE_EVEN,
    TYPE_THREE_ODD,
)


class TestClassify:
    """Test classify and SemigroupClass labels."""

    @pytest.mark.parametrize(
        ("gens", "symmetry", "label", "odd"),
        [
            (BRESINSKY_ODD, SymmetryClass.SYMMETRIC_NON_CI, "symmetric-nonCI", True),
            (PSEUDO_SYMMETRIC, SymmetryClass.PSEUDO_SYMMETRIC, "pseudo-symmetric", True),
            (TYPE_THREE_EVEN, SymmetryClass.ALMOST_SYMMETRIC, "almost-symmetric-type-3", False),
            (TYPE_THREE_ODD, SymmetryClass.ALMOST_SYMMETRIC, "almost-symmetric-type-3", True),
            ((2, 3), SymmetryClass.SYMMETRIC_CI, "symmetric-CI", False),
            ((4, 5, 11), SymmetryClass.NON_ALMOST_SYMMETRIC, "non-almost-symmetric", False),
        ],
    )
    def test_classify_when_example_then_symmetry_label_and_parity(
        self, gens: tuple[int, ...], symmetry: SymmetryClass, label: str, odd: bool
    ) -> None:
        """Each worked example lands in its known class."""
        klass = classify(new_semigroup(gens))
        assert klass.symmetry is symmetry
        assert klass.label == label
        assert klass.all_generators_odd is odd
        assert klass.embedding_dimension == len(gens)

    def test_is_almost_symmetric_when_non_almost_symmetric_class_then_false(self) -> None:
        """Only the non-almost-symmetric class reports False."""
        klass = SemigroupClass(
            symmetry=SymmetryClass.NON_ALMOST_SYMMETRIC, type=2, embedding_dimension=3, all_generators_odd=False
        )
        assert not klass.is_almost_symmetric
        assert classify(new_semigroup((3, 4, 5))).is_almost_symmetric


class TestCompleteIntersection:
    """Test is_complete_intersection and gluing_splits."""

    @pytest.mark.parametrize(
        ("gens", "expected"),
        [((2, 3), True), (BRESINSKY_ODD, False), ((4, 6, 9), True), ((3, 4, 5), False), ((1,), True)],
    )
    def test_is_complete_intersection_when_example_then_matches(self, gens: tuple[int, ...], expected: bool) -> None:
        """Gluing recursion on small known cases."""
        assert is_complete_intersection(new_semigroup(gens)) is expected

    def test_gluing_splits_when_four_six_nine_then_both_splits(self) -> None:
        """⟨4,6,9⟩ is the gluing of ⟨4⟩ with ⟨2,3⟩ and of ⟨2,3⟩ with ⟨9⟩."""
        assert list(gluing_splits((4, 6, 9))) == [((4,), (6, 9)), ((4, 6), (9,))]

    def test_gluing_splits_when_not_symmetric_then_none(self) -> None:
        """⟨3,4,5⟩ admits no gluing."""
        assert list(gluing_splits((3, 4, 5))) == []

    @pytest.mark.parametrize(
        "gens",
        [(6, 10, 15), (8, 10, 11, 13), (9, 12, 15, 16), (6, 9, 10, 15), (10, 12, 15, 16), (5, 6, 7, 8)],
    )
    def test_is_complete_intersection_when_compared_with_presentation_then_agrees(
        self, gens: tuple[int, ...]
    ) -> None:
        """A complete intersection has exactly e-1 minimal relations."""
        semigroup = new_semigroup(gens)
        expected = minimal_relation_count(semigroup) == semigroup.embedding_dimension - 1
        assert is_complete_intersection(semigroup) is expected
