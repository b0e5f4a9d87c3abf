"""Forward builders for the parametrized families.

Every builder evaluates its generator formulas, keeps that formula order on
the returned :class:`Construction`, and builds the semigroup from the sorted
minimal generators. Postconditions are checked unless ``verify=False``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from numerical_semigroups.core.base import (
    MAX_GENERATOR,
    DegenerateParametersError,
    Generators,
    InvariantViolationError,
    ParameterError,
    SemigroupTooLargeError,
)
from numerical_semigroups.core.semigroup import NumericalSemigroup, new_semigroup
from numerical_semigroups.models.responses import BuildResponse
from numerical_semigroups.services.classification import classify, is_complete_intersection
from numerical_semigroups.services.ideals import Herzog3Params
from numerical_semigroups.services.structure import bresinsky_generators

if TYPE_CHECKING:
    from collections.abc import Sequence

__all__ = [
    "Construction",
    "build_pseudo_sym3",
    "build_response",
    "build_symmetric_bresinsky",
    "build_type3",
    "family_sn",
    "type3_generators",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Construction:
    """A built semigroup with the generators in formula order and its inputs."""

    family: str
    semigroup: NumericalSemigroup
    formula_gens: Generators
    params: dict[str, Any] = field(default_factory=dict)


def _reject(message: str, error: type[ParameterError] = ParameterError) -> ParameterError:
    logger.info("Rejected construction: %s", message)
    return error(message)


def _assemble(formula: Generators, edim: int) -> NumericalSemigroup:
    if max(formula) > MAX_GENERATOR:
        raise SemigroupTooLargeError(f"Generator {max(formula)} exceeds the overflow guard 2^40")
    divisor = math.gcd(*formula)
    if divisor != 1:
        raise _reject(f"gcd(n_i)={divisor}")
    if len(set(formula)) != len(formula):
        raise _reject(f"Generators {formula} coincide", DegenerateParametersError)
    semigroup = new_semigroup(formula)
    if semigroup.embedding_dimension != edim:
        raise _reject(
            f"Generators {formula} are not minimal: {semigroup} has embedding "
            f"dimension {semigroup.embedding_dimension}",
            DegenerateParametersError,
        )
    return semigroup


def build_symmetric_bresinsky(
    a: Sequence[int], b: Sequence[int], *, verify: bool = True
) -> Construction:
    """Build ``⟨n1, n2, n3, n4⟩`` from Bresinsky data with ``α_i = a_i + b_i``.

    Raises:
        ParameterError: Bad lengths, an entry below one, or gcd above one.
        DegenerateParametersError: The generators are not four distinct minimal ones.
    """
    if len(a) != 4 or len(b) != 4:
        raise _reject("Bresinsky data needs exactly four a_i and four b_i")
    for name, values in (("a", a), ("b", b)):
        for k, value in enumerate(values):
            if value < 1:
                raise _reject(f"{name}_{k + 1} < 1")
    formula = bresinsky_generators(a, b)
    semigroup = _assemble(formula, 4)
    if verify and (not semigroup.is_symmetric() or is_complete_intersection(semigroup)):
        raise InvariantViolationError(f"{semigroup} is not symmetric non-CI")
    return Construction(
        family="bresinsky",
        semigroup=semigroup,
        formula_gens=formula,
        params={
            "a": tuple(a),
            "b": tuple(b),
            "alpha": tuple(x + y for x, y in zip(a, b, strict=True)),
        },
    )


def build_pseudo_sym3(alpha: int, beta: int, gamma: int, *, verify: bool = True) -> Construction:
    """Build the pseudo-symmetric ``⟨(β+1)γ+1, (γ+1)α+1, (α+1)β+1⟩``.

    Raises:
        ParameterError: An exponent below one.
        DegenerateParametersError: Coincident, non-minimal or non-coprime generators.
    """
    params = Herzog3Params(alpha, beta, gamma)
    formula = params.generators
    if len(set(formula)) != 3:
        raise _reject(f"Generators {formula} coincide", DegenerateParametersError)
    if math.gcd(*formula) != 1:
        raise _reject(f"gcd(n_i)={math.gcd(*formula)}", DegenerateParametersError)
    semigroup = _assemble(formula, 3)
    if verify:
        if not semigroup.is_pseudo_symmetric():
            raise InvariantViolationError(f"{semigroup} is not pseudo-symmetric")
        same_parity = len({alpha % 2, beta % 2, gamma % 2}) == 1
        if semigroup.all_generators_odd != same_parity:
            raise InvariantViolationError(f"Parity rule fails for {semigroup}")
    return Construction(
        family="psym3",
        semigroup=semigroup,
        formula_gens=formula,
        params={"alpha": alpha, "beta": beta, "gamma": gamma},
    )


def type3_generators(alpha: Sequence[int]) -> Generators:
    """``n_i = (α_{i+1}-1)(α_{i+2}-1)α_{i+3} + α_{i+1}`` with indices mod 4."""
    return tuple(
        (alpha[(i + 1) % 4] - 1) * (alpha[(i + 2) % 4] - 1) * alpha[(i + 3) % 4]
        + alpha[(i + 1) % 4]
        for i in range(4)
    )


def _check_type3(semigroup: NumericalSemigroup, f: int) -> None:
    pf = (f, 2 * f, 3 * f)
    if (
        semigroup.pseudo_frobenius != pf
        or not semigroup.all_generators_odd
        or not semigroup.is_almost_symmetric()
    ):
        raise InvariantViolationError(
            f"{semigroup} has PF{list(semigroup.pseudo_frobenius)}, expected {list(pf)}"
        )


def build_type3(alpha: Sequence[int], *, verify: bool = True) -> Construction:
    """Build the almost symmetric type-3 semigroup with odd ``α_i > 1``.

    Raises:
        ParameterError: An even ``α_i``, one at most 1, or gcd above one.
        DegenerateParametersError: The generators are not four minimal ones.
    """
    if len(alpha) != 4:
        raise _reject("Type-three data needs exactly four alpha_i")
    for k, value in enumerate(alpha):
        if value <= 1 or value % 2 == 0:
            raise _reject(f"alpha_{k + 1}={value} must be odd and greater than 1")
    formula = type3_generators(alpha)
    semigroup = _assemble(formula, 4)
    f = (alpha[1] - 1) * formula[1] - formula[0]
    if verify:
        _check_type3(semigroup, f)
    return Construction(
        family="type3",
        semigroup=semigroup,
        formula_gens=formula,
        params={"alpha": tuple(alpha), "f": f},
    )


def family_sn(n: int, *, verify: bool = True) -> Construction:
    """``S_n = ⟨15, 15+2^(n+2), 15+2^(n+2)+2^(n+1), 15+2^(n+2)+2^(n+1)+2^n⟩``.

    Raises:
        ParameterError: ``n < 1``.
        SemigroupTooLargeError: The generators pass the overflow guard.
    """
    if n < 1:
        raise _reject(f"n={n} must be positive")
    if n + 3 > MAX_GENERATOR.bit_length():
        raise SemigroupTooLargeError(f"S_{n} exceeds the overflow guard 2^40")
    second = 15 + 2 ** (n + 2)
    formula = (15, second, second + 2 ** (n + 1), second + 2 ** (n + 1) + 2**n)
    semigroup = _assemble(formula, 4)
    f = 15 + 2 ** (n + 3)
    if verify:
        _check_type3(semigroup, f)
    return Construction(
        family="sn",
        semigroup=semigroup,
        formula_gens=formula,
        params={"n": n, "alpha": (3 + 2**n, 3, 3, 3), "f": f},
    )


def build_response(construction: Construction) -> BuildResponse:
    """Public view of a construction with its invariants and class."""
    semigroup = construction.semigroup
    return BuildResponse(
        family=construction.family,
        gens=list(semigroup.gens),
        formula_gens=list(construction.formula_gens),
        params=construction.params,
        F=semigroup.frobenius,
        PF=list(semigroup.pseudo_frobenius),
        type=semigroup.type,
        all_odd=semigroup.all_generators_odd,
        **{"class": classify(semigroup).label},
    )
