"""Binomial generators of defining ideals for the classified families.

Exponent vectors refer to the generators in the order recorded on each
relation, which is the relabeled order of the family's parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

from numerical_semigroups.core.base import (
    Generators,
    InvariantViolationError,
    ParameterError,
    PreconditionError,
)
from numerical_semigroups.core.rf_matrix import factorizations_over
from numerical_semigroups.core.semigroup import NumericalSemigroup, alpha_exponents
from numerical_semigroups.services.classification import is_complete_intersection
from numerical_semigroups.services.structure import bresinsky_params, type3_params

__all__ = [
    "BinomialRelation",
    "Herzog3Params",
    "defining_ideal",
    "herzog3_minors",
]

Exponents = tuple[int, ...]


def _monomial(exponents: Exponents) -> str:
    factors = [
        f"x{j + 1}" if e == 1 else f"x{j + 1}^{e}" for j, e in enumerate(exponents) if e
    ]
    return "*".join(factors) or "1"


@dataclass(frozen=True, slots=True)
class BinomialRelation:
    """The binomial ``x^lhs - x^rhs`` over variables indexed like ``gens``."""

    gens: Generators
    lhs: Exponents
    rhs: Exponents

    def __post_init__(self) -> None:
        size = len(self.gens)
        if len(self.lhs) != size or len(self.rhs) != size:
            raise InvariantViolationError("Exponent vectors must match the generators")
        if min(self.lhs + self.rhs) < 0:
            raise InvariantViolationError("Exponents must be nonnegative")
        if any(x and y for x, y in zip(self.lhs, self.rhs, strict=True)):
            raise InvariantViolationError(f"{self} has overlapping supports")
        if self.degree_of(self.lhs) != self.degree_of(self.rhs):
            raise InvariantViolationError(f"{self} is not homogeneous over {self.gens}")

    def degree_of(self, exponents: Exponents) -> int:
        return sum(e * g for e, g in zip(exponents, self.gens, strict=True))

    @property
    def degree(self) -> int:
        """S-degree shared by both monomials."""
        return self.degree_of(self.lhs)

    def __str__(self) -> str:
        return f"{_monomial(self.lhs)} - {_monomial(self.rhs)}"


@dataclass(frozen=True, slots=True)
class Herzog3Params:
    """Exponents of the 2x3 matrix whose minors define a pseudo-symmetric S, e=3.

    The second row is normalized to ``(x1, x2, x3)``.
    """

    alpha: int
    beta: int
    gamma: int

    def __post_init__(self) -> None:
        if min(self.alpha, self.beta, self.gamma) < 1:
            raise ParameterError(
                f"alpha, beta, gamma must be positive, got "
                f"({self.alpha}, {self.beta}, {self.gamma})"
            )

    @property
    def generators(self) -> Generators:
        """``n1=(β+1)γ+1``, ``n2=(γ+1)α+1``, ``n3=(α+1)β+1`` in formula order."""
        a, b, c = self.alpha, self.beta, self.gamma
        return ((b + 1) * c + 1, (c + 1) * a + 1, (a + 1) * b + 1)


def herzog3_minors(params: Herzog3Params) -> list[BinomialRelation]:
    """The three maximal minors for ``params``, over the formula-order generators."""
    a, b, c = params.alpha, params.beta, params.gamma
    gens = params.generators
    return [
        BinomialRelation(gens, (a + 1, 0, 0), (0, 1, c)),
        BinomialRelation(gens, (0, b + 1, 0), (a, 0, 1)),
        BinomialRelation(gens, (0, 0, c + 1), (1, b, 0)),
    ]


def _three_generated(semigroup: NumericalSemigroup) -> list[BinomialRelation]:
    gens = semigroup.gens
    relations: list[BinomialRelation] = []
    for i, alpha in enumerate(alpha_exponents(semigroup)):
        others = gens[:i] + gens[i + 1 :]
        # non-symmetric, so α_i n_i has exactly one factorization over the others
        rest = factorizations_over(others, alpha * gens[i])[0]
        rhs = rest[:i] + (0,) + rest[i:]
        lhs = tuple(alpha if j == i else 0 for j in range(3))
        relations.append(BinomialRelation(gens, lhs, rhs))
    return relations


def _bresinsky(semigroup: NumericalSemigroup) -> list[BinomialRelation]:
    p = bresinsky_params(semigroup)
    al1, al2, al3, al4 = p.alpha
    a1, a2, a3, a4 = p.a
    b1, b2, b3, b4 = p.b
    return [
        BinomialRelation(p.gens, (al1, 0, 0, 0), (0, 0, b3, a4)),
        BinomialRelation(p.gens, (0, al2, 0, 0), (a1, 0, 0, b4)),
        BinomialRelation(p.gens, (0, 0, al3, 0), (b1, a2, 0, 0)),
        BinomialRelation(p.gens, (0, 0, 0, al4), (0, b2, a3, 0)),
        BinomialRelation(p.gens, (a1, 0, a3, 0), (0, a2, 0, a4)),
    ]


def _type3(semigroup: NumericalSemigroup) -> list[BinomialRelation]:
    p = type3_params(semigroup)
    al1, al2, al3, al4 = p.alpha
    return [
        BinomialRelation(p.gens, (al1, 0, 0, 0), (0, al2 - 1, 0, 1)),
        BinomialRelation(p.gens, (0, al2, 0, 0), (1, 0, al3 - 1, 0)),
        BinomialRelation(p.gens, (0, 0, al3, 0), (0, 1, 0, al4 - 1)),
        BinomialRelation(p.gens, (0, 0, 0, al4), (al1 - 1, 0, 1, 0)),
        BinomialRelation(p.gens, (al1 - 1, 1, 0, 0), (0, 0, al3 - 1, 1)),
        BinomialRelation(p.gens, (1, 0, 0, al4 - 1), (0, al2 - 1, 1, 0)),
    ]


def defining_ideal(semigroup: NumericalSemigroup) -> list[BinomialRelation]:
    """Closed-form binomial generators of the defining ideal of ``semigroup``.

    Covers non-symmetric ``e=3`` (three relations), symmetric non-CI ``e=4``
    (five) and almost symmetric ``e=4`` of type 3 with odd generators (six).

    Raises:
        PreconditionError: ``semigroup`` lies outside these families.
    """
    edim = semigroup.embedding_dimension
    if edim == 3 and not semigroup.is_symmetric():
        return _three_generated(semigroup)
    if edim == 4 and semigroup.is_symmetric() and not is_complete_intersection(semigroup):
        return _bresinsky(semigroup)
    if (
        edim == 4
        and semigroup.type == 3
        and semigroup.all_generators_odd
        and semigroup.is_almost_symmetric()
    ):
        return _type3(semigroup)
    raise PreconditionError(f"No closed-form defining ideal is known here for {semigroup}")
