"""Tests for the forward family builders."""

from __future__ import annotations

import pytest

from numerical_semigroups.core.base import (
    DegenerateParametersError,
    ParameterError,
    SemigroupTooLargeError,
)
from numerical_semigroups.services.constructors import (
    build_pseudo_sym3,
    build_response,
    build_symmetric_bresinsky,
    build_type3,
    family_sn,
    type3_generators,
)
from numerical_semigroups.services.structure import type3_params
from numerical_semigroups.tests.golden import BRESINSKY_ODD, TYPE_THREE_ODD


class TestBuildSymmetricBresinsky:
    """Test build_symmetric_bresinsky."""

    def test_build_symmetric_bresinsky_when_unit_a_then_odd_example(self) -> None:
        """a=(1,1,1,1), b=(4,2,2,2) builds ⟨13,17,23,19⟩."""
        built = build_symmetric_bresinsky((1, 1, 1, 1), (4, 2, 2, 2))
        assert built.formula_gens == BRESINSKY_ODD
        assert built.semigroup.gens == (13, 17, 19, 23)
        assert built.params["alpha"] == (5, 3, 3, 3)

    def test_build_symmetric_bresinsky_when_a_below_one_then_raises(self) -> None:
        """a_1 = 0 is outside the parameter domain."""
        with pytest.raises(ParameterError, match="a_1 < 1"):
            build_symmetric_bresinsky((0, 1, 1, 1), (4, 2, 2, 2))

    def test_build_symmetric_bresinsky_when_wrong_length_then_raises(self) -> None:
        """Exactly four a_i and b_i are required."""
        with pytest.raises(ParameterError, match="exactly four"):
            build_symmetric_bresinsky((1, 1, 1), (4, 2, 2))


class TestBuildPseudoSym3:
    """Test build_pseudo_sym3."""

    def test_build_pseudo_sym3_when_same_parity_then_all_odd(self) -> None:
        """(1,1,3) builds ⟨3,5,7⟩ with odd generators."""
        built = build_pseudo_sym3(1, 1, 3)
        assert built.formula_gens == (7, 5, 3)
        assert built.semigroup.gens == (3, 5, 7)
        assert built.semigroup.is_pseudo_symmetric()
        assert built.semigroup.all_generators_odd

    def test_build_pseudo_sym3_when_mixed_parity_then_even_generator(self) -> None:
        """(2,1,3) builds ⟨4,7,9⟩ with F=10."""
        built = build_pseudo_sym3(2, 1, 3)
        assert built.formula_gens == (7, 9, 4)
        assert built.semigroup.frobenius == 10
        assert built.semigroup.genus == 6
        assert not built.semigroup.all_generators_odd

    def test_build_pseudo_sym3_when_coincident_then_raises_degenerate(self) -> None:
        """(2,2,2) makes all three generators 7."""
        with pytest.raises(DegenerateParametersError, match="coincide"):
            build_pseudo_sym3(2, 2, 2)


class TestBuildType3:
    """Test build_type3 and family_sn."""

    def test_build_type3_when_five_three_three_three_then_worked_example(self) -> None:
        """α=(5,3,3,3) builds ⟨15,23,27,29⟩ with f=31."""
        built = build_type3((5, 3, 3, 3))
        assert built.formula_gens == TYPE_THREE_ODD
        assert built.semigroup.pseudo_frobenius == (31, 62, 93)
        assert built.params["f"] == 31

    def test_build_type3_when_seven_three_three_three_then_s2(self) -> None:
        """α=(7,3,3,3) builds ⟨15,31,39,43⟩ with PF = {47, 94, 141}."""
        built = build_type3((7, 3, 3, 3))
        assert built.semigroup.gens == (15, 31, 39, 43)
        assert built.semigroup.pseudo_frobenius == (47, 94, 141)

    def test_build_type3_when_all_three_then_gcd_rejected(self) -> None:
        """α=(3,3,3,3) makes every generator 15."""
        assert type3_generators((3, 3, 3, 3)) == (15, 15, 15, 15)
        with pytest.raises(ParameterError, match=r"gcd\(n_i\)=15"):
            build_type3((3, 3, 3, 3))

    @pytest.mark.parametrize("alpha", [(4, 3, 3, 3), (1, 3, 3, 3), (5, 3, 3)])
    def test_build_type3_when_alpha_out_of_domain_then_raises(self, alpha: tuple[int, ...]) -> None:
        """Even α_i, α_i ≤ 1 and wrong lengths are rejected."""
        with pytest.raises(ParameterError):
            build_type3(alpha)

    def test_build_type3_when_round_trip_then_alpha_recovered_up_to_rotation(self) -> None:
        """Extraction recovers the input α up to a cyclic relabeling."""
        alpha = (5, 3, 7, 3)
        found = type3_params(build_type3(alpha).semigroup).alpha
        assert found in {alpha[k:] + alpha[:k] for k in range(4)}

    @pytest.mark.parametrize(
        ("n", "gens"),
        [(1, (15, 23, 27, 29)), (2, (15, 31, 39, 43)), (3, (15, 47, 63, 71))],
    )
    def test_family_sn_when_small_n_then_generators_and_pf(self, n: int, gens: tuple[int, ...]) -> None:
        """S_n has PF = {f, 2f, 3f} with f = 15 + 2^(n+3)."""
        built = family_sn(n)
        f = 15 + 2 ** (n + 3)
        assert built.semigroup.gens == gens
        assert built.semigroup.pseudo_frobenius == (f, 2 * f, 3 * f)
        assert built.params["alpha"] == (3 + 2**n, 3, 3, 3)

    def test_family_sn_when_n_not_positive_then_raises(self) -> None:
        """n starts at one."""
        with pytest.raises(ParameterError):
            family_sn(0)

    def test_family_sn_when_n_huge_then_raises_too_large(self) -> None:
        """The overflow guard stops the construction."""
        with pytest.raises(SemigroupTooLargeError):
            family_sn(40)


class TestBuildResponse:
    """Test build_response."""

    def test_build_response_when_type3_then_public_fields(self) -> None:
        """The response carries invariants under their short names."""
        payload = build_response(build_type3((5, 3, 3, 3))).model_dump(mode="json", by_alias=True)
        assert payload["family"] == "type3"
        assert payload["gens"] == [15, 23, 27, 29]
        assert payload["F"] == 93
        assert payload["PF"] == [31, 62, 93]
        assert payload["class"] == "almost-symmetric-type-3"
        assert payload["params"] == {"alpha": [5, 3, 3, 3], "f": 31}
        assert payload["all_odd"] is True
