"""Symmetry classification and complete-intersection detection.

Complete intersections are recognized by Delorme's gluing recursion: a
semigroup with at least two generators is a complete intersection when its
generators split into ``A_1 ∪ A_2`` such that, with ``d_k = gcd(A_k)``,
``gcd(d_1, d_2) = 1``, ``d_1`` is a non-generator element of ``⟨A_2/d_2⟩``,
``d_2`` is a non-generator element of ``⟨A_1/d_1⟩``, and both quotients are
complete intersections themselves.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from numerical_semigroups.core.base import Generators, SymmetryClass
from numerical_semigroups.core.semigroup import submonoid_contains

if TYPE_CHECKING:
    from collections.abc import Iterator

    from numerical_semigroups.core.semigroup import NumericalSemigroup

__all__ = [
    "SemigroupClass",
    "classify",
    "gluing_splits",
    "is_complete_intersection",
]


@dataclass(frozen=True, slots=True)
class SemigroupClass:
    """Classification record of a numerical semigroup."""

    symmetry: SymmetryClass
    type: int
    embedding_dimension: int
    all_generators_odd: bool

    @property
    def label(self) -> str:
        """Class label; almost symmetric classes carry their type."""
        if self.symmetry is SymmetryClass.ALMOST_SYMMETRIC:
            return f"almost-symmetric-type-{self.type}"
        return self.symmetry.value

    @property
    def is_almost_symmetric(self) -> bool:
        return self.symmetry is not SymmetryClass.NON_ALMOST_SYMMETRIC


def gluing_splits(gens: Generators) -> Iterator[tuple[Generators, Generators]]:
    """Yield the splits ``(A_1, A_2)`` of ``gens`` that satisfy the gluing conditions.

    ``A_1`` always contains the smallest generator, so each unordered split is
    visited once.
    """
    first, rest = gens[0], gens[1:]
    for mask in range(2 ** len(rest) - 1):
        part_one = (first, *(g for k, g in enumerate(rest) if mask >> k & 1))
        part_two = tuple(g for k, g in enumerate(rest) if not mask >> k & 1)
        d_one, d_two = math.gcd(*part_one), math.gcd(*part_two)
        if math.gcd(d_one, d_two) != 1:
            continue
        quotient_one = tuple(g // d_one for g in part_one)
        quotient_two = tuple(g // d_two for g in part_two)
        if d_one in quotient_two or not submonoid_contains(quotient_two, d_one):
            continue
        if d_two in quotient_one or not submonoid_contains(quotient_one, d_two):
            continue
        yield part_one, part_two


@functools.lru_cache(maxsize=65536)
def _is_ci(gens: Generators) -> bool:
    if len(gens) <= 2:
        return True
    for part_one, part_two in gluing_splits(gens):
        d_one, d_two = math.gcd(*part_one), math.gcd(*part_two)
        if _is_ci(tuple(g // d_one for g in part_one)) and _is_ci(
            tuple(g // d_two for g in part_two)
        ):
            return True
    return False


def is_complete_intersection(semigroup: NumericalSemigroup) -> bool:
    """Whether ``semigroup`` is a complete intersection (gluing recursion)."""
    return _is_ci(semigroup.gens)


def classify(semigroup: NumericalSemigroup) -> SemigroupClass:
    """Classify ``semigroup`` by symmetry, splitting symmetric ones by CI."""
    if semigroup.is_symmetric():
        symmetry = (
            SymmetryClass.SYMMETRIC_CI
            if is_complete_intersection(semigroup)
            else SymmetryClass.SYMMETRIC_NON_CI
        )
    elif semigroup.is_pseudo_symmetric():
        symmetry = SymmetryClass.PSEUDO_SYMMETRIC
    elif semigroup.is_almost_symmetric():
        symmetry = SymmetryClass.ALMOST_SYMMETRIC
    else:
        symmetry = SymmetryClass.NON_ALMOST_SYMMETRIC
    return SemigroupClass(
        symmetry=symmetry,
        type=semigroup.type,
        embedding_dimension=semigroup.embedding_dimension,
        all_generators_odd=semigroup.all_generators_odd,
    )
