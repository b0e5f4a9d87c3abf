"""Tests for census enumeration, aggregation and determinism.

The full bound-100 tables are marked slow.
"""

from __future__ import annotations

import math
from itertools import combinations

import pytest

from numerical_semigroups.core.base import InvalidQueryError, Parity, SymmetryClass
from numerical_semigroups.core.semigroup import minimalize_generators
from numerical_semigroups.formats.base import TableFormat, render_census
from numerical_semigroups.services.census import (
    CensusQuery,
    census,
    census_class_key,
    enumerate_semigroups,
    map_partitions,
    partition_generators,
)
from numerical_semigroups.services.classification import SemigroupClass, classify
from numerical_semigroups.tests.golden import CENSUS_100_E5, CENSUS_100_E34


def _square(x: int) -> int:
    return x * x


class TestCensusQuery:
    """Test CensusQuery validation."""

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"max_gen": 2, "edim": {2}},
            {"max_gen": 10, "edim": {1}},
            {"max_gen": 10, "edim": {8}},
            {"max_gen": 10, "edim": set()},
            {"max_gen": 10, "edim": {3}, "parity": "even"},
            {"max_gen": 10, "edim": {3}, "classes": {"almost-symmetric-type-1"}},
            {"max_gen": 10, "edim": {3}, "classes": {"nonsense"}},
            {"max_gen": 10, "edim": {3}, "min_gen": 1},
        ],
    )
    def test_create_when_out_of_range_then_raises_invalid_query(self, kwargs: dict) -> None:
        """Bound, edim range, parity and class labels are validated."""
        with pytest.raises(InvalidQueryError):
            CensusQuery.create(**kwargs)

    def test_create_when_valid_then_frozen_sets(self) -> None:
        """Iterables are normalized to frozensets."""
        query = CensusQuery.create(max_gen=10, edim=[3, 4, 3], parity="any", classes=["pseudo-symmetric"])
        assert query.edim == frozenset({3, 4})
        assert query.parity is Parity.ANY
        assert query.classes == frozenset({"pseudo-symmetric"})

    def test_candidates_when_odd_then_odd_values_from_five(self) -> None:
        """Odd parity skips every even value and multiplicity three."""
        assert CensusQuery.create(max_gen=10, edim={2}).candidates == [5, 7, 9]
        assert CensusQuery.create(max_gen=5, edim={2}, parity="any").candidates == [2, 3, 4, 5]

    @pytest.mark.parametrize(
        ("parity", "min_gen", "expected"),
        [("odd", 3, [3, 5, 7, 9]), ("odd", 4, [5, 7, 9]), ("any", 7, [7, 8, 9, 10])],
    )
    def test_candidates_when_min_gen_then_lower_bound_applied(
        self, parity: str, min_gen: int, expected: list[int]
    ) -> None:
        """min_gen overrides the default lower bound, rounded up to odd for odd parity."""
        query = CensusQuery.create(max_gen=10, edim={2}, parity=parity, min_gen=min_gen)
        assert query.candidates == expected
        assert query.lowest == min_gen


class TestEnumeration:
    """Test enumerate_semigroups and partition_generators."""

    def test_enumerate_semigroups_when_bound_three_then_only_two_three(self) -> None:
        """max_gen=3, e=2, any parity gives exactly ⟨2,3⟩."""
        query = CensusQuery.create(max_gen=3, edim={2}, parity="any")
        assert [s.gens for s in enumerate_semigroups(query)] == [(2, 3)]

    def test_enumerate_semigroups_when_bound_thirteen_then_contains_worked_examples(self) -> None:
        """⟨4,7,10,13⟩ and ⟨8,10,11,13⟩ both appear."""
        query = CensusQuery.create(max_gen=13, edim={4}, parity="any")
        found = {s.gens for s in enumerate_semigroups(query)}
        assert {(4, 7, 10, 13), (8, 10, 11, 13)} <= found

    def test_enumerate_semigroups_when_odd_bound_29_then_contains_odd_examples(self) -> None:
        """⟨15,23,27,29⟩ and ⟨13,17,19,23⟩ both appear."""
        query = CensusQuery.create(max_gen=29, edim={4})
        found = {s.gens for s in enumerate_semigroups(query)}
        assert {(15, 23, 27, 29), (13, 17, 19, 23)} <= found

    def test_enumerate_semigroups_when_small_bound_then_matches_brute_force(self) -> None:
        """Each coprime minimal set appears exactly once."""
        query = CensusQuery.create(max_gen=12, edim={2, 3, 4}, parity="any")
        emitted = [s.gens for s in enumerate_semigroups(query)]
        expected = {
            combo
            for size in (2, 3, 4)
            for combo in combinations(range(2, 13), size)
            if minimalize_generators(combo) == combo and math.gcd(*combo) == 1
        }
        assert len(emitted) == len(set(emitted))
        assert set(emitted) == expected

    def test_partition_generators_when_largest_five_then_three_four_five(self) -> None:
        """⟨2,3⟩ already contains 5, so only ⟨3,4,5⟩ ends at 5 with e=3."""
        query = CensusQuery.create(max_gen=5, edim={3}, parity="any")
        assert list(partition_generators(5, query)) == [(3, 4, 5)]


class TestCensus:
    """Test census aggregation."""

    def test_census_when_two_generated_any_parity_then_coprime_pairs(self) -> None:
        """Every 2-generated semigroup is symmetric; there are 11 coprime pairs in 2..7."""
        table = census(CensusQuery.create(max_gen=7, edim={2}, parity="any"), workers=1)
        assert table.counts() == {"e2/t1": 11}
        assert table.enumerated == table.almost_symmetric == 11

    def test_census_when_two_generated_odd_then_odd_coprime_pairs(self) -> None:
        """(5,7), (5,9), (7,9) by default; with 3 admitted, (3,9) is still excluded by its gcd."""
        table = census(CensusQuery.create(max_gen=9, edim={2}), workers=1)
        assert table.counts() == {"e2/t1": 3}
        assert table.min_gen == 5
        table = census(CensusQuery.create(max_gen=9, edim={2}, min_gen=3), workers=1)
        assert table.counts() == {"e2/t1": 5}

    def test_census_when_odd_default_then_multiplicity_three_excluded(self) -> None:
        """⟨3,5,7⟩ is pseudo-symmetric but only counted when min_gen admits 3."""
        default = census(CensusQuery.create(max_gen=7, edim={3}), workers=1)
        assert default.counts() == {"e3/t1": 0, "e3/t2": 0}
        widened = census(CensusQuery.create(max_gen=7, edim={3}, min_gen=3), workers=1)
        assert widened.counts() == {"e3/t1": 0, "e3/t2": 1}

    def test_census_when_bound_five_e3_then_single_type_two(self) -> None:
        """⟨3,4,5⟩ is pseudo-symmetric of type two."""
        table = census(CensusQuery.create(max_gen=5, edim={3}, parity="any"), workers=1)
        assert table.counts() == {"e3/t1": 0, "e3/t2": 1}

    def test_census_when_e4_then_rows_in_fixed_order(self) -> None:
        """e=4 rows are t1-nonci, ci, t2, t3 even when empty."""
        table = census(CensusQuery.create(max_gen=9, edim={4}), workers=1)
        assert list(table.counts()) == ["e4/t1-nonci", "e4/ci", "e4/t2", "e4/t3"]

    def test_census_when_counted_then_rows_partition_almost_symmetric(self) -> None:
        """The row sum equals an independent almost-symmetric count."""
        query = CensusQuery.create(max_gen=25, edim={3, 4})
        table = census(query, workers=1)
        independent = sum(1 for s in enumerate_semigroups(query) if s.is_almost_symmetric())
        assert sum(table.counts().values()) == table.almost_symmetric == independent

    def test_census_when_with_records_then_sorted_almost_symmetric_records(self) -> None:
        """Records cover the almost symmetric population, ordered by (edim, gens)."""
        table = census(CensusQuery.create(max_gen=21, edim={3, 4}), workers=1, with_records=True)
        assert len(table.records) == table.almost_symmetric
        keys = [(len(r.gens), r.gens) for r in table.records]
        assert keys == sorted(keys)
        assert all(r.all_odd for r in table.records)

    def test_census_when_class_filter_then_records_restricted(self) -> None:
        """A class filter restricts both counts and records; the AS total is unfiltered."""
        query = CensusQuery.create(max_gen=25, edim={3}, classes=["pseudo-symmetric"])
        table = census(query, workers=1, with_records=True)
        assert {r.class_ for r in table.records} <= {"pseudo-symmetric"}
        assert table.counts()["e3/t1"] == 0
        assert table.counts()["e3/t2"] == len(table.records)
        assert table.almost_symmetric >= len(table.records)

    def test_census_when_one_and_two_workers_then_identical_csv(self) -> None:
        """Parallel aggregation gives byte-identical CSV."""
        query = CensusQuery.create(max_gen=31, edim={3, 4})
        single = render_census(census(query, workers=1), TableFormat.CSV)
        parallel = render_census(census(query, workers=2), TableFormat.CSV)
        assert single == parallel

    def test_census_when_odd_even_bound_pair_then_identical_counts(self) -> None:
        """For odd parity, bounds 2k-1 and 2k give the same table."""
        low = census(CensusQuery.create(max_gen=29, edim={3, 4}), workers=1)
        high = census(CensusQuery.create(max_gen=30, edim={3, 4}), workers=1)
        assert low.counts() == high.counts()

    @pytest.mark.slow
    def test_census_when_bound_100_e34_then_reproduces_table(self) -> None:
        """Odd generators up to 100, e=3 and e=4."""
        table = census(CensusQuery.create(max_gen=100, edim={3, 4}))
        assert table.counts() == CENSUS_100_E34

    @pytest.mark.slow
    def test_census_when_bound_100_e5_then_reproduces_table(self) -> None:
        """Odd generators up to 100, e=5."""
        table = census(CensusQuery.create(max_gen=100, edim={5}))
        assert table.counts() == CENSUS_100_E5


class TestHelpers:
    """Test census_class_key and map_partitions."""

    @pytest.mark.parametrize(
        ("symmetry", "type_", "edim", "expected"),
        [
            (SymmetryClass.SYMMETRIC_CI, 1, 3, "t1"),
            (SymmetryClass.SYMMETRIC_CI, 1, 4, "ci"),
            (SymmetryClass.SYMMETRIC_NON_CI, 1, 5, "t1-nonci"),
            (SymmetryClass.PSEUDO_SYMMETRIC, 2, 4, "t2"),
            (SymmetryClass.ALMOST_SYMMETRIC, 3, 4, "t3"),
            (SymmetryClass.NON_ALMOST_SYMMETRIC, 2, 4, None),
        ],
    )
    def test_census_class_key_when_class_then_row_key(
        self, symmetry: SymmetryClass, type_: int, edim: int, expected: str | None
    ) -> None:
        """Only almost symmetric classes get a row."""
        klass = SemigroupClass(symmetry=symmetry, type=type_, embedding_dimension=edim, all_generators_odd=True)
        assert census_class_key(klass) == expected

    def test_census_class_key_when_real_semigroup_then_consistent_with_classify(self, type_three_odd) -> None:
        """⟨15,23,27,29⟩ counts as e4/t3."""
        assert census_class_key(classify(type_three_odd)) == "t3"

    @pytest.mark.parametrize("workers", [1, 2])
    def test_map_partitions_when_workers_vary_then_input_order(self, workers: int) -> None:
        """Results pair with their partition in input order."""
        assert list(map_partitions(_square, [5, 3, 4], workers)) == [(5, 25), (3, 9), (4, 16)]
