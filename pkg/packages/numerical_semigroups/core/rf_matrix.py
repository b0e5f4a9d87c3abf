"""Factorizations and row-factorization (RF) matrices of pseudo-Frobenius numbers.

For ``f ∈ PF(S)`` and each generator ``n_i``, ``f + n_i`` lies in S and every
factorization of it avoids ``n_i``; replacing the (zero) ``i``-th coefficient
by ``-1`` gives a row expressing ``f`` over the generators. An RF-matrix picks
one such row for every ``i``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from numerical_semigroups.config import rf_cap
from numerical_semigroups.core.base import (
    Factorization,
    Generators,
    InvariantViolationError,
    NotPseudoFrobeniusError,
    PreconditionError,
    RowParity,
)

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from numerical_semigroups.core.semigroup import NumericalSemigroup

__all__ = [
    "RFMatrix",
    "RFMatrixStream",
    "factorizations",
    "factorizations_over",
    "has_unique_rf_matrix",
    "rf_matrices",
    "rf_rows",
    "row_parity",
]

Row = tuple[int, ...]


def factorizations_over(gens: Sequence[int], value: int) -> list[Factorization]:
    """Enumerate every nonnegative coefficient vector of ``value`` over ``gens``.

    Depth-first over the generators in decreasing order; branches whose
    residual is not divisible by the gcd of the remaining generators are cut.

    Args:
        gens: Positive integers (any order, gcd arbitrary).
        value: Target value.

    Returns:
        Coefficient vectors indexed like ``gens``, in lexicographic order.
    """
    if value < 0:
        return []
    size = len(gens)
    order = sorted(range(size), key=lambda j: -gens[j])
    suffix_gcd = [0] * (size + 1)
    for pos in range(size - 1, -1, -1):
        suffix_gcd[pos] = math.gcd(gens[order[pos]], suffix_gcd[pos + 1])

    found: list[Factorization] = []
    coeffs = [0] * size

    def visit(pos: int, remaining: int) -> None:
        if remaining % suffix_gcd[pos]:
            return
        index = order[pos]
        step = gens[index]
        if pos == size - 1:
            coeffs[index] = remaining // step
            found.append(tuple(coeffs))
            coeffs[index] = 0
            return
        for count in range(remaining // step + 1):
            coeffs[index] = count
            visit(pos + 1, remaining - count * step)
        coeffs[index] = 0

    if size:
        visit(0, value)
    elif value == 0:
        found.append(())
    found.sort()
    return found


def factorizations(semigroup: NumericalSemigroup, value: int) -> list[Factorization]:
    """Factorizations of ``value`` over the minimal generators of ``semigroup``.

    Empty exactly when ``value`` is not in the semigroup.
    """
    if not semigroup.contains(value):
        return []
    return factorizations_over(semigroup.gens, value)


def _require_pseudo_frobenius(semigroup: NumericalSemigroup, f: int) -> None:
    if f not in semigroup.pseudo_frobenius:
        raise NotPseudoFrobeniusError(
            f"{f} is not a pseudo-Frobenius number of {semigroup}; "
            f"PF = {list(semigroup.pseudo_frobenius)}"
        )


def rf_rows(semigroup: NumericalSemigroup, f: int, i: int) -> list[Row]:
    """All admissible ``i``-th rows of an RF-matrix of ``f`` (0-based ``i``).

    Raises:
        NotPseudoFrobeniusError: If ``f`` is not in PF(S).
        PreconditionError: If ``i`` is not a generator index.
    """
    _require_pseudo_frobenius(semigroup, f)
    gens = semigroup.gens
    if not 0 <= i < len(gens):
        raise PreconditionError(f"Row index {i} out of range for {semigroup}")
    others = gens[:i] + gens[i + 1 :]
    rows = [z[:i] + (-1,) + z[i:] for z in factorizations_over(others, f + gens[i])]
    if not rows:
        raise InvariantViolationError(f"{f} + {gens[i]} has no factorization in {semigroup}")
    return rows


def row_parity(row: Sequence[int]) -> RowParity:
    """Parity of the entry sum of ``row``, the ``-1`` included."""
    return RowParity.ODD if sum(row) % 2 else RowParity.EVEN


@dataclass(frozen=True, slots=True)
class RFMatrix:
    """An RF-matrix of ``value`` with columns ordered like ``gens``."""

    value: int
    gens: Generators
    rows: tuple[Row, ...]

    def __post_init__(self) -> None:
        size = len(self.gens)
        if len(self.rows) != size:
            raise InvariantViolationError("RF-matrix must be square")
        for i, row in enumerate(self.rows):
            if len(row) != size or row[i] != -1:
                raise InvariantViolationError(f"Row {i} of RF({self.value}) is malformed")
            if any(entry < 0 for j, entry in enumerate(row) if j != i):
                raise InvariantViolationError(f"Row {i} of RF({self.value}) has a negative entry")
            if sum(a * n for a, n in zip(row, self.gens, strict=True)) != self.value:
                raise InvariantViolationError(f"Row {i} of RF({self.value}) does not sum to {self.value}")

    def relabel(self, perm: Sequence[int]) -> RFMatrix:
        """Reorder generators as ``gens[perm[0]], gens[perm[1]], ...``."""
        return RFMatrix(
            value=self.value,
            gens=tuple(self.gens[p] for p in perm),
            rows=tuple(tuple(self.rows[p][q] for q in perm) for p in perm),
        )

    def parities(self) -> tuple[RowParity, ...]:
        return tuple(row_parity(row) for row in self.rows)


class RFMatrixStream:
    """Lazily streamed RF-matrices of ``f``, stopping after ``cap`` matrices.

    After iteration, exactly one of :attr:`exhausted` and :attr:`truncated` is
    set. Matrices come in lexicographic order of their row tuples.
    """

    def __init__(self, semigroup: NumericalSemigroup, f: int, cap: int) -> None:
        if cap < 1:
            raise PreconditionError("cap must be positive")
        _require_pseudo_frobenius(semigroup, f)
        self.value = f
        self.gens = semigroup.gens
        self.cap = cap
        self.row_choices = tuple(
            tuple(rf_rows(semigroup, f, i)) for i in range(len(semigroup.gens))
        )
        self.truncated = False
        self.exhausted = False

    @property
    def total(self) -> int:
        """Number of RF-matrices of ``f`` (product of the row counts)."""
        return math.prod(len(rows) for rows in self.row_choices)

    def __iter__(self) -> Iterator[RFMatrix]:
        for emitted, rows in enumerate(itertools.product(*self.row_choices)):
            if emitted == self.cap:
                self.truncated = True
                return
            yield RFMatrix(value=self.value, gens=self.gens, rows=rows)
        self.exhausted = True

    def collect(self) -> tuple[list[RFMatrix], bool]:
        """Drain the stream; returns the matrices and the truncation flag."""
        matrices = list(self)
        return matrices, self.truncated


def rf_matrices(
    semigroup: NumericalSemigroup, f: int, cap: int | None = None
) -> RFMatrixStream:
    """Stream the RF-matrices of ``f``; ``cap`` defaults to ``NSG_RF_CAP``."""
    return RFMatrixStream(semigroup, f, rf_cap() if cap is None else cap)


def has_unique_rf_matrix(semigroup: NumericalSemigroup, f: int) -> bool:
    """Whether every row of an RF-matrix of ``f`` is forced."""
    return all(len(rf_rows(semigroup, f, i)) == 1 for i in range(len(semigroup.gens)))
