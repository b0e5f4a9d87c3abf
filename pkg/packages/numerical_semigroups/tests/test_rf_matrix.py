"""Tests for factorizations, RF rows and RF-matrix streams."""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING

import pytest

from numerical_semigroups.core.base import (
    InvariantViolationError,
    NotPseudoFrobeniusError,
    PreconditionError,
    RowParity,
)
from numerical_semigroups.core.rf_matrix import (
    RFMatrix,
    factorizations,
    factorizations_over,
    has_unique_rf_matrix,
    rf_matrices,
    rf_rows,
    row_parity,
)

if TYPE_CHECKING:
    from numerical_semigroups.core.semigroup import NumericalSemigroup


class TestFactorizations:
    """Test factorization enumeration."""

    def test_factorizations_when_six_in_two_three_then_two_vectors(self, two_three: NumericalSemigroup) -> None:
        """6 = 3·2 = 2·3 in ⟨2,3⟩."""
        assert factorizations(two_three, 6) == [(0, 2), (3, 0)]

    def test_factorizations_when_value_outside_semigroup_then_empty(self, type_three_even: NumericalSemigroup) -> None:
        """3 is a gap of ⟨4,7,10,13⟩."""
        assert factorizations(type_three_even, 3) == []

    def test_factorizations_when_compared_with_nested_loops_then_identical(
        self, frobenius_25: NumericalSemigroup
    ) -> None:
        """Every coefficient vector of 33 over ⟨8,10,11,13⟩, checked exhaustively."""
        expected = sorted(
            v
            for v in itertools.product(range(5), range(4), range(4), range(3))
            if 8 * v[0] + 10 * v[1] + 11 * v[2] + 13 * v[3] == 33
        )
        assert factorizations(frobenius_25, 33) == expected
        assert (0, 0, 3, 0) in expected

    def test_factorizations_over_when_non_coprime_generators_then_divisibility_pruned(self) -> None:
        """Odd targets have no factorization over even generators."""
        assert factorizations_over((4, 6), 13) == []
        assert factorizations_over((4, 6), 12) == [(0, 2), (3, 0)]

    def test_factorizations_over_when_negative_or_empty_then_edge_results(self) -> None:
        """Negative values have no factorization; the empty sum only factors zero."""
        assert factorizations_over((2, 3), -1) == []
        assert factorizations_over((), 0) == [()]
        assert factorizations_over((), 3) == []


class TestRFRows:
    """Test rf_rows and row_parity."""

    def test_rf_rows_when_frobenius_25_first_row_then_both_known_rows(self, frobenius_25: NumericalSemigroup) -> None:
        """Row 0 of RF(25) can be (-1,0,3,0) or (-1,2,0,1)."""
        rows = rf_rows(frobenius_25, 25, 0)
        assert (-1, 0, 3, 0) in rows
        assert (-1, 2, 0, 1) in rows

    def test_rf_rows_when_pseudo_symmetric_first_row_then_unique(self, pseudo_symmetric: NumericalSemigroup) -> None:
        """Row 0 of RF(53) for ⟨15,17,35,43⟩ is forced."""
        assert rf_rows(pseudo_symmetric, 53, 0) == [(-1, 4, 0, 0)]

    def test_rf_rows_when_two_three_then_single_row(self, two_three: NumericalSemigroup) -> None:
        """1 = 3 - 2."""
        assert rf_rows(two_three, 1, 0) == [(-1, 1)]

    def test_rf_rows_when_not_pseudo_frobenius_then_raises(self, frobenius_25: NumericalSemigroup) -> None:
        """24 is not in PF(⟨8,10,11,13⟩)."""
        with pytest.raises(NotPseudoFrobeniusError, match="24"):
            rf_rows(frobenius_25, 24, 0)

    def test_rf_rows_when_index_out_of_range_then_raises_precondition(self, two_three: NumericalSemigroup) -> None:
        """Row indices are 0-based generator positions."""
        with pytest.raises(PreconditionError):
            rf_rows(two_three, 1, 2)

    @pytest.mark.parametrize(
        ("row", "expected"),
        [((-1, 4, 0, 0), RowParity.ODD), ((-1, 1), RowParity.EVEN), ((4, 6, 0, -1), RowParity.ODD)],
    )
    def test_row_parity_when_row_then_parity_of_entry_sum(self, row: tuple[int, ...], expected: RowParity) -> None:
        """The -1 entry counts towards the sum."""
        assert row_parity(row) is expected


class TestRFMatrices:
    """Test RF-matrix streaming, uniqueness and relabeling."""

    def test_rf_matrices_when_frobenius_25_then_several_matrices_in_lex_order(
        self, frobenius_25: NumericalSemigroup
    ) -> None:
        """Both displayed first rows appear among the streamed matrices."""
        stream = rf_matrices(frobenius_25, 25)
        matrices, truncated = stream.collect()
        assert not truncated
        assert stream.exhausted
        assert len(matrices) == stream.total >= 2
        first_rows = {m.rows[0] for m in matrices}
        assert {(-1, 0, 3, 0), (-1, 2, 0, 1)} <= first_rows
        assert [m.rows for m in matrices] == sorted(m.rows for m in matrices)

    def test_rf_matrices_when_pseudo_symmetric_then_unique_displayed_matrix(
        self, pseudo_symmetric: NumericalSemigroup
    ) -> None:
        """RF(53) of ⟨15,17,35,43⟩ is unique."""
        matrices, _ = rf_matrices(pseudo_symmetric, 53).collect()
        assert [m.rows for m in matrices] == [
            ((-1, 4, 0, 0), (0, -1, 2, 0), (3, 0, -1, 1), (3, 3, 0, -1)),
        ]
        assert has_unique_rf_matrix(pseudo_symmetric, 53)

    def test_rf_matrices_when_large_pseudo_symmetric_then_unique_displayed_matrix(
        self, pseudo_symmetric_large: NumericalSemigroup
    ) -> None:
        """RF(431) of ⟨57,61,123,163⟩ is unique."""
        assert pseudo_symmetric_large.pseudo_frobenius == (431, 862)
        matrices, _ = rf_matrices(pseudo_symmetric_large, 431).collect()
        assert [m.rows for m in matrices] == [
            ((-1, 8, 0, 0), (0, -1, 4, 0), (4, 0, -1, 2), (4, 6, 0, -1)),
        ]

    def test_rf_matrices_when_cap_reached_then_truncated(self, frobenius_25: NumericalSemigroup) -> None:
        """A cap of one stops after the first matrix and flags truncation."""
        stream = rf_matrices(frobenius_25, 25, cap=1)
        matrices, truncated = stream.collect()
        assert len(matrices) == 1
        assert truncated
        assert not stream.exhausted

    def test_rf_matrices_when_cap_not_positive_then_raises(self, frobenius_25: NumericalSemigroup) -> None:
        """cap must be at least one."""
        with pytest.raises(PreconditionError):
            rf_matrices(frobenius_25, 25, cap=0)

    def test_rf_matrices_when_default_cap_then_read_from_env(
        self, monkeypatch: pytest.MonkeyPatch, frobenius_25: NumericalSemigroup
    ) -> None:
        """NSG_RF_CAP sets the default cap."""
        monkeypatch.setenv("NSG_RF_CAP", "1")
        assert rf_matrices(frobenius_25, 25).cap == 1

    def test_has_unique_rf_matrix_when_frobenius_25_then_false(self, frobenius_25: NumericalSemigroup) -> None:
        """F=25 of ⟨8,10,11,13⟩ has more than one RF-matrix."""
        assert not has_unique_rf_matrix(frobenius_25, 25)

    def test_has_unique_rf_matrix_when_two_three_then_true(self, two_three: NumericalSemigroup) -> None:
        """Each row of RF(1) of ⟨2,3⟩ is forced."""
        assert has_unique_rf_matrix(two_three, 1)

    def test_relabel_when_swapped_then_rows_and_columns_permuted(self) -> None:
        """Relabeling ⟨2,3⟩ as (3,2) permutes rows and columns together."""
        matrix = RFMatrix(value=1, gens=(2, 3), rows=((-1, 1), (2, -1)))
        swapped = matrix.relabel((1, 0))
        assert swapped.gens == (3, 2)
        assert swapped.rows == ((-1, 2), (1, -1))
        assert swapped.parities() == (RowParity.ODD, RowParity.EVEN)

    @pytest.mark.parametrize(
        "rows",
        [
            ((-1, 1),),
            ((0, 1), (2, -1)),
            ((-1, 1), (2, -2)),
            ((-1, 2), (2, -1)),
        ],
    )
    def test_rf_matrix_when_malformed_then_raises_invariant_violation(self, rows: tuple[tuple[int, ...], ...]) -> None:
        """Shape, diagonal, sign and value are all validated."""
        with pytest.raises(InvariantViolationError):
            RFMatrix(value=1, gens=(2, 3), rows=rows)
