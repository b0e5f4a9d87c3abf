"""Exact arithmetic of numerical semigroups.

A :class:`NumericalSemigroup` is built once from its generators and carries
its Apéry set with respect to the multiplicity; every other invariant
(Frobenius number, genus, pseudo-Frobenius numbers, symmetry predicates) is
read from that set. Instances are immutable and safe to share between
worker processes.
"""

from __future__ import annotations

import functools
import heapq
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from numerical_semigroups.config import max_multiplicity
from numerical_semigroups.core.base import (
    MAX_GENERATOR,
    Generators,
    InvalidGeneratorsError,
    InvariantViolationError,
    NotCofiniteError,
    PreconditionError,
    SemigroupTooLargeError,
)

if TYPE_CHECKING:
    from collections.abc import Iterable

__all__ = [
    "AperySet",
    "NumericalSemigroup",
    "alpha_exponents",
    "apery_values",
    "from_minimal_generators",
    "minimalize_generators",
    "new_semigroup",
    "submonoid_contains",
]


def _validate_raw(raw: Iterable[int]) -> list[int]:
    values = list(raw)
    if not values:
        raise InvalidGeneratorsError("At least one generator is required")
    for value in values:
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise InvalidGeneratorsError(
                f"Generators must be positive integers, got {value!r}"
            )
    return values


def apery_values(gens: Generators, modulus: int) -> tuple[int, ...]:
    """Compute the Apéry set of ``⟨gens⟩`` with respect to ``modulus``.

    Dijkstra relaxation over the residue graph mod ``modulus``: residue ``r``
    has an edge of weight ``g`` to ``(r + g) mod modulus`` for each generator.

    Args:
        gens: Generators with gcd 1; ``modulus`` must lie in the monoid.
        modulus: Positive element of the monoid used as modulus.

    Returns:
        Tuple whose ``k``-th entry is the least monoid element congruent to
        ``k`` modulo ``modulus``.
    """
    if modulus > max_multiplicity():
        raise SemigroupTooLargeError(
            f"Multiplicity {modulus} exceeds the Apéry bound {max_multiplicity()}"
        )
    steps = [g for g in gens if g % modulus]
    dist = [-1] * modulus
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        value, residue = heapq.heappop(heap)
        if value > dist[residue]:
            continue
        for step in steps:
            candidate = value + step
            target = candidate % modulus
            if dist[target] < 0 or candidate < dist[target]:
                dist[target] = candidate
                heapq.heappush(heap, (candidate, target))
    if min(dist) < 0:
        raise InvariantViolationError(
            f"Generators {gens} do not reach every residue modulo {modulus}"
        )
    return tuple(dist)


@functools.lru_cache(maxsize=8192)
def _reduced_apery(pool: Generators) -> tuple[int, tuple[int, ...]]:
    modulus = pool[0]
    return modulus, apery_values(pool, modulus)


def submonoid_contains(gens: Iterable[int], x: int) -> bool:
    """Decide whether ``x`` is a nonnegative integer combination of ``gens``.

    The generators may share a common divisor ``d``; membership reduces to
    ``d | x`` and ``x/d ∈ ⟨gens/d⟩``, the latter a numerical semigroup.

    Examples:
        >>> submonoid_contains([10, 14], 34)
        True
        >>> submonoid_contains([10, 14], 17)
        False
    """
    pool = tuple(sorted(set(gens)))
    if x < 0:
        return False
    if x == 0:
        return True
    if not pool:
        return False
    divisor = math.gcd(*pool)
    if x % divisor:
        return False
    modulus, apery = _reduced_apery(tuple(g // divisor for g in pool))
    reduced = x // divisor
    return reduced >= apery[reduced % modulus]


def minimalize_generators(raw: Iterable[int]) -> Generators:
    """Return the unique minimal generating set of the monoid generated by ``raw``.

    Examples:
        >>> minimalize_generators([2, 3, 4, 6])
        (2, 3)
        >>> minimalize_generators([8, 10, 11, 13])
        (8, 10, 11, 13)
    """
    values = sorted(set(_validate_raw(raw)))
    kept: list[int] = []
    for value in values:
        # a value can only be generated by strictly smaller ones
        if not kept or not submonoid_contains(kept, value):
            kept.append(value)
    return tuple(kept)


@dataclass(frozen=True, slots=True)
class AperySet:
    """Apéry set of a numerical semigroup with respect to ``base``."""

    base: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.base or self.values[0] != 0:
            raise InvariantViolationError(f"Malformed Apéry set for base {self.base}")


@dataclass(frozen=True, slots=True)
class NumericalSemigroup:
    """A numerical semigroup with all invariants cached at construction.

    Use :func:`new_semigroup` to build instances.

    Attributes:
        gens: Minimal generators in ascending order.
        apery: Apéry set with respect to the multiplicity.
        frobenius: F(S), the largest integer outside S (``-1`` for S = N).
        genus: Number of positive integers outside S.
        pseudo_frobenius: PF(S) in ascending order; the last entry is F(S).
    """

    gens: Generators
    apery: AperySet
    frobenius: int
    genus: int
    pseudo_frobenius: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero element."""
        return self.gens[0]

    @property
    def embedding_dimension(self) -> int:
        """Number of minimal generators."""
        return len(self.gens)

    @property
    def type(self) -> int:
        """Cardinality of PF(S)."""
        return len(self.pseudo_frobenius)

    @property
    def all_generators_odd(self) -> bool:
        """Whether every minimal generator is odd."""
        return all(g % 2 for g in self.gens)

    def contains(self, x: int) -> bool:
        """Membership test read off the Apéry set."""
        if x < 0:
            return False
        return x >= self.apery.values[x % self.apery.base]

    def gaps(self) -> list[int]:
        """Positive integers outside S, ascending. Materialized on demand."""
        return [x for x in range(1, self.frobenius + 1) if not self.contains(x)]

    def is_symmetric(self) -> bool:
        """Type one."""
        return self.type == 1

    def is_pseudo_symmetric(self) -> bool:
        """PF(S) = {F/2, F}."""
        f = self.frobenius
        return f % 2 == 0 and self.pseudo_frobenius == (f // 2, f)

    def is_almost_symmetric(self) -> bool:
        """Almost symmetry, decided by counting and by Nari's pairing.

        Raises:
            InvariantViolationError: If the two criteria disagree.
        """
        pf = self.pseudo_frobenius
        by_count = 2 * self.genus == self.frobenius + self.type
        t = len(pf)
        by_pairing = all(pf[i] + pf[t - 2 - i] == self.frobenius for i in range(t - 1))
        if by_count != by_pairing:
            raise InvariantViolationError(
                f"Almost symmetry criteria disagree on {self.gens}: "
                f"counting={by_count}, pairing={by_pairing}"
            )
        return by_count

    def alpha_exponents(self) -> tuple[int, ...]:
        """α_i for each generator, in generator order. See :func:`alpha_exponents`."""
        return alpha_exponents(self)

    def __str__(self) -> str:
        return "⟨" + ",".join(str(g) for g in self.gens) + "⟩"


def _pseudo_frobenius(gens: Generators, apery: tuple[int, ...]) -> tuple[int, ...]:
    # w is maximal in Ap(S, m) w.r.t. <=_S iff no w + n_i stays in Ap(S, m)
    modulus = gens[0]
    others = gens[1:]
    maximal = [
        w
        for w in apery
        if all(apery[(w + g) % modulus] != w + g for g in others)
    ]
    return tuple(sorted(w - modulus for w in maximal))


def _check_minimal(gens: Generators, apery: tuple[int, ...]) -> None:
    modulus = gens[0]
    for i, g in enumerate(gens):
        # a value below g has no factorization using g, so S-membership of g - h
        # is membership in the monoid of the other generators
        for h in gens[:i]:
            rest = g - h
            if rest >= apery[rest % modulus]:
                raise InvalidGeneratorsError(
                    f"Generators {gens} are not minimal: {g} = {h} + {rest}"
                )


def new_semigroup(gens: Iterable[int], *, minimalize: bool = True) -> NumericalSemigroup:
    """Build a fully cached numerical semigroup.

    Args:
        gens: Generators in any order.
        minimalize: Reduce ``gens`` to the minimal generating set first. When
            ``False`` the input must already be minimal (duplicates included)
            and this is checked.

    Raises:
        InvalidGeneratorsError: Empty, non-positive or non-minimal input.
        NotCofiniteError: The generators share a divisor greater than one.
        SemigroupTooLargeError: The overflow or Apéry-size guard triggers.
    """
    if minimalize:
        ordered = minimalize_generators(gens)
    else:
        values = _validate_raw(gens)
        ordered = tuple(sorted(values))
        if len(set(ordered)) != len(ordered):
            raise InvalidGeneratorsError(f"Duplicate generators in {ordered}")
    divisor = math.gcd(*ordered)
    if divisor != 1:
        raise NotCofiniteError(f"gcd(n_i)={divisor}", divisor)
    if ordered[-1] > MAX_GENERATOR:
        raise SemigroupTooLargeError(
            f"Generator {ordered[-1]} exceeds the overflow guard 2^40"
        )
    apery = apery_values(ordered, ordered[0])
    if not minimalize:
        _check_minimal(ordered, apery)
    return _assemble(ordered, apery)


def from_minimal_generators(gens: Generators) -> NumericalSemigroup:
    """Build from generators already known to be minimal, ascending and coprime.

    Skips every input check; the census enumerator guarantees these properties.
    """
    return _assemble(gens, apery_values(gens, gens[0]))


def _assemble(ordered: Generators, apery: tuple[int, ...]) -> NumericalSemigroup:
    modulus = ordered[0]
    genus = sum((w - k) // modulus for k, w in enumerate(apery))
    return NumericalSemigroup(
        gens=ordered,
        apery=AperySet(base=modulus, values=apery),
        frobenius=max(apery) - modulus,
        genus=genus,
        pseudo_frobenius=_pseudo_frobenius(ordered, apery),
    )


@functools.lru_cache(maxsize=65536)
def _alpha_for(gens: Generators) -> tuple[int, ...]:
    alphas: list[int] = []
    for i, n in enumerate(gens):
        others = gens[:i] + gens[i + 1 :]
        # n_j / gcd(n_i, n_j) copies of n_i already lie in <n_j>
        cap = min(g // math.gcd(n, g) for g in others)
        for alpha in range(1, cap + 1):
            if submonoid_contains(others, alpha * n):
                alphas.append(alpha)
                break
        else:
            raise InvariantViolationError(
                f"alpha search for {n} in {gens} exceeded its cap {cap}"
            )
    return tuple(alphas)


def alpha_exponents(semigroup: NumericalSemigroup) -> tuple[int, ...]:
    """Return ``α_i = min{α ≥ 1 : α n_i ∈ ⟨n_j : j ≠ i⟩}`` for each generator.

    Raises:
        PreconditionError: If the embedding dimension is below two.
    """
    if semigroup.embedding_dimension < 2:
        raise PreconditionError("alpha exponents need at least two generators")
    return _alpha_for(semigroup.gens)
