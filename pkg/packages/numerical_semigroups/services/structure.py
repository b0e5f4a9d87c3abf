"""Structure parameters of 4-generated symmetric, pseudo-symmetric and type-3 semigroups.

Each extractor searches the 24 relabelings of the generators in
``itertools.permutations`` order and returns the first match, so results are
deterministic. Indices are 0-based throughout; ``perm[k]`` is the position in
the sorted generators of the ``k``-th relabeled generator.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from numerical_semigroups.core.base import (
    Generators,
    InvariantViolationError,
    PreconditionError,
    RowParity,
    SymmetricParityCase,
    TemplateMismatchError,
    UFCase,
)
from numerical_semigroups.core.rf_matrix import RFMatrix, rf_matrices
from numerical_semigroups.core.semigroup import alpha_exponents
from numerical_semigroups.services.classification import is_complete_intersection

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Sequence

    from numerical_semigroups.core.semigroup import NumericalSemigroup

__all__ = [
    "BresinskyParams",
    "PseudoSym4Params",
    "Type3Params",
    "bresinsky_generators",
    "bresinsky_params",
    "pseudo_sym4_params",
    "pseudo_sym_parity_check",
    "search_bresinsky_params",
    "symmetric_parity_case",
    "type3_params",
    "uf_case",
]

logger = logging.getLogger(__name__)

Perm = tuple[int, ...]
Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class BresinskyParams:
    """Bresinsky data of a 4-generated symmetric non-CI semigroup.

    Attributes:
        perm: Relabeling of the sorted generators.
        gens: Relabeled generators ``(n_1, n_2, n_3, n_4)``.
        alpha: ``α_i`` of the relabeled generators.
        a: ``a_i`` with ``0 < a_i < α_i``.
        b: ``b_i = α_i - a_i``.
    """

    perm: Perm
    gens: Generators
    alpha: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        for k in range(4):
            if self.a[k] + self.b[k] != self.alpha[k] or self.a[k] < 1 or self.b[k] < 1:
                raise InvariantViolationError(f"Bresinsky exponents out of range at index {k}")
        if bresinsky_generators(self.a, self.b) != self.gens:
            raise InvariantViolationError(f"Bresinsky identities fail for {self.gens}")


@dataclass(frozen=True, slots=True)
class PseudoSym4Params:
    """Canonical form of the unique RF-matrix of F/2 of a pseudo-symmetric S, e=4."""

    perm: Perm
    gens: Generators
    alpha: tuple[int, ...]
    a: int


@dataclass(frozen=True, slots=True)
class Type3Params:
    """Relabeling under which RF(f) and RF(2f) take the type-three shape.

    ``f`` is the smallest pseudo-Frobenius number; PF(S) = {f, 2f, 3f}.
    """

    perm: Perm
    gens: Generators
    alpha: tuple[int, ...]
    f: int

    @property
    def all_alpha_odd(self) -> bool:
        return all(x % 2 for x in self.alpha)


def bresinsky_generators(a: Sequence[int], b: Sequence[int]) -> Generators:
    """Evaluate ``n_1..n_4`` from ``a_i, b_i`` with ``α_i = a_i + b_i``."""
    a1, a2, a3, a4 = a
    b1, b2, b3, b4 = b
    al1, al2, al3, al4 = (x + y for x, y in zip(a, b, strict=True))
    return (
        al2 * al3 * a4 + a2 * b3 * b4,
        al3 * al4 * a1 + a3 * b4 * b1,
        al1 * al4 * a2 + a4 * b1 * b2,
        al1 * al2 * a3 + a1 * b2 * b3,
    )


def _require_edim4(semigroup: NumericalSemigroup) -> None:
    if semigroup.embedding_dimension != 4:
        raise PreconditionError(
            f"{semigroup} has embedding dimension {semigroup.embedding_dimension}, expected 4"
        )


def _relabelings(
    semigroup: NumericalSemigroup,
) -> Iterator[tuple[Perm, Generators, tuple[int, ...]]]:
    gens = semigroup.gens
    alpha = alpha_exponents(semigroup)
    for perm in itertools.permutations(range(len(gens))):
        yield perm, tuple(gens[p] for p in perm), tuple(alpha[p] for p in perm)


def _split_pairs(
    target: int, first: int, first_cap: int, second: int, second_cap: int
) -> dict[int, int]:
    """Solutions ``x*first + y*second = target`` with ``0 < x < first_cap``, ``0 < y < second_cap``.

    Keyed by ``y``.
    """
    found: dict[int, int] = {}
    for y in range(1, second_cap):
        rest = target - y * second
        if rest > 0 and rest % first == 0 and rest // first < first_cap:
            found[y] = rest // first
    return found


def _bresinsky_solutions(
    n: Generators, alpha: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    al1, al2, al3, al4 = alpha
    n1, n2, n3, n4 = n
    # α1 n1 = b3 n3 + a4 n4, keyed by a4
    eq1 = _split_pairs(al1 * n1, n3, al3, n4, al4)
    # α3 n3 = b1 n1 + a2 n2, keyed by a2
    eq3 = _split_pairs(al3 * n3, n1, al1, n2, al2)
    if not eq1 or not eq3:
        return
    # α2 n2 = a1 n1 + b4 n4, keyed by b4
    eq2 = _split_pairs(al2 * n2, n1, al1, n4, al4)
    # α4 n4 = b2 n2 + a3 n3, keyed by a3
    eq4 = _split_pairs(al4 * n4, n2, al2, n3, al3)
    candidates: list[tuple[int, ...]] = []
    for a4, b3 in eq1.items():
        a3 = al3 - b3
        if eq4.get(a3) is None:
            continue
        b2 = eq4[a3]
        a2 = al2 - b2
        b1 = eq3.get(a2)
        if b1 is None:
            continue
        a1 = al1 - b1
        if eq2.get(al4 - a4) != a1:
            continue
        candidates.append((a1, a2, a3, a4))
    yield from sorted(candidates)


def search_bresinsky_params(semigroup: NumericalSemigroup) -> BresinskyParams | None:
    """Search every relabeling of a 4-generated S for Bresinsky parameters.

    No symmetry precondition; ``None`` when no relabeling admits parameters.
    Within a relabeling the lexicographically least ``a`` wins.
    """
    _require_edim4(semigroup)
    for perm, n, alpha in _relabelings(semigroup):
        for a in _bresinsky_solutions(n, alpha):
            b = tuple(x - y for x, y in zip(alpha, a, strict=True))
            if bresinsky_generators(a, b) == n:
                return BresinskyParams(perm=perm, gens=n, alpha=alpha, a=a, b=b)
    return None


def bresinsky_params(semigroup: NumericalSemigroup) -> BresinskyParams:
    """Extract Bresinsky parameters of a 4-generated symmetric non-CI semigroup.

    Raises:
        PreconditionError: ``e != 4``, S not symmetric, or S a complete intersection.
        TemplateMismatchError: No relabeling admits parameters.
    """
    _require_edim4(semigroup)
    if not semigroup.is_symmetric():
        raise PreconditionError(f"{semigroup} is not symmetric")
    if is_complete_intersection(semigroup):
        raise PreconditionError(f"{semigroup} is a complete intersection")
    params = search_bresinsky_params(semigroup)
    if params is not None:
        return params
    raise TemplateMismatchError(f"No Bresinsky parameters found for {semigroup}")


def symmetric_parity_case(params: BresinskyParams) -> SymmetricParityCase:
    """Parity case of Bresinsky parameters; not ``none`` iff every generator is odd."""
    alpha_odd = [x % 2 == 1 for x in params.alpha]
    a_odd = [x % 2 == 1 for x in params.a]
    if all(alpha_odd) and all(a_odd):
        return SymmetricParityCase.A
    if not any(alpha_odd) and all(a_odd):
        return SymmetricParityCase.C
    even = [k for k, odd in enumerate(alpha_odd) if not odd]
    if len(even) == 1:
        i0 = even[0]
        expected = [k in {i0, (i0 - 1) % 4} for k in range(4)]
        if a_odd == expected:
            return SymmetricParityCase.B
    return SymmetricParityCase.NONE


def _unique_rf(semigroup: NumericalSemigroup, f: int) -> RFMatrix:
    stream = rf_matrices(semigroup, f)
    if stream.total != 1:
        raise InvariantViolationError(
            f"RF({f}) of {semigroup} has {stream.total} matrices, expected one"
        )
    return next(iter(stream))


def _require_pseudo_symmetric4(semigroup: NumericalSemigroup) -> int:
    _require_edim4(semigroup)
    if not semigroup.is_pseudo_symmetric():
        raise PreconditionError(f"{semigroup} is not pseudo-symmetric")
    return semigroup.frobenius // 2


def pseudo_sym4_params(semigroup: NumericalSemigroup) -> PseudoSym4Params:
    """Match RF(F/2) against the canonical pseudo-symmetric template.

    Template rows: ``(-1, α2-1, 0, 0)``, ``(0, -1, α3-1, 0)``,
    ``(α1-1, 0, -1, α4-1)``, ``(α1-1, a, 0, -1)``.

    Raises:
        PreconditionError: ``e != 4`` or S not pseudo-symmetric.
        TemplateMismatchError: No relabeling matches.
    """
    half = _require_pseudo_symmetric4(semigroup)
    matrix = _unique_rf(semigroup, half)
    for perm, n, alpha in _relabelings(semigroup):
        m = matrix.relabel(perm).rows
        zeros = (m[0][2], m[0][3], m[1][0], m[1][3], m[2][1], m[3][2])
        if any(zeros) or m[3][0] != m[2][0]:
            continue
        read = (m[2][0] + 1, m[0][1] + 1, m[1][2] + 1, m[2][3] + 1)
        if read == alpha:
            return PseudoSym4Params(perm=perm, gens=n, alpha=alpha, a=m[3][1])
    raise TemplateMismatchError(f"RF({half}) of {semigroup} matches no relabeling")


def pseudo_sym_parity_check(semigroup: NumericalSemigroup) -> bool:
    """Evaluate both sides of the odd-generator criterion for pseudo-symmetric S, e=4.

    Returns whether (every generator odd) agrees with (F/2 and every row of
    RF(F/2) share one parity).
    """
    half = _require_pseudo_symmetric4(semigroup)
    matrix = _unique_rf(semigroup, half)
    expected = RowParity.ODD if half % 2 else RowParity.EVEN
    rows_match = all(parity is expected for parity in matrix.parities())
    return semigroup.all_generators_odd == rows_match


def _type3_rows(alpha: Sequence[int]) -> tuple[Rows, Rows]:
    al1, al2, al3, al4 = alpha
    rf_f = (
        (-1, al2 - 1, 0, 0),
        (0, -1, al3 - 1, 0),
        (0, 0, -1, al4 - 1),
        (al1 - 1, 0, 0, -1),
    )
    rf_2f = (
        (-1, al2 - 2, al3 - 1, 0),
        (0, -1, al3 - 2, al4 - 1),
        (al1 - 1, 0, -1, al4 - 2),
        (al1 - 2, al2 - 1, 0, -1),
    )
    return rf_f, rf_2f


def _rows_express(rows: Rows, gens: Generators, value: int) -> bool:
    for i, row in enumerate(rows):
        if row[i] != -1 or any(x < 0 for j, x in enumerate(row) if j != i):
            return False
        if sum(x * g for x, g in zip(row, gens, strict=True)) != value:
            return False
    return True


def _require_type3(semigroup: NumericalSemigroup) -> None:
    _require_edim4(semigroup)
    if semigroup.type != 3 or not semigroup.is_almost_symmetric():
        raise PreconditionError(f"{semigroup} is not almost symmetric of type 3")


def type3_params(semigroup: NumericalSemigroup) -> Type3Params:
    """Relabeling and ``α_i`` for a 4-generated almost symmetric semigroup of type 3.

    Also checks ``F = (α2-3) n2 + (2 α3 - 2) n3 - n1`` in the matched labels.

    Raises:
        PreconditionError: Wrong family, or PF(S) is not ``{f, 2f, 3f}``.
        TemplateMismatchError: No relabeling makes both templates RF-matrices.
    """
    _require_type3(semigroup)
    f = semigroup.pseudo_frobenius[0]
    if semigroup.pseudo_frobenius != (f, 2 * f, 3 * f):
        raise PreconditionError(
            f"PF{list(semigroup.pseudo_frobenius)} of {semigroup} is not of the form {{f,2f,3f}}"
        )
    for perm, n, alpha in _relabelings(semigroup):
        rf_f, rf_2f = _type3_rows(alpha)
        if not (_rows_express(rf_f, n, f) and _rows_express(rf_2f, n, 2 * f)):
            continue
        frobenius = (alpha[1] - 3) * n[1] + (2 * alpha[2] - 2) * n[2] - n[0]
        if frobenius != semigroup.frobenius:
            raise InvariantViolationError(
                f"Frobenius identity fails for {semigroup} under {perm}: {frobenius}"
            )
        return Type3Params(perm=perm, gens=n, alpha=alpha, f=f)
    raise TemplateMismatchError(f"RF({f}) and RF({2 * f}) of {semigroup} match no relabeling")


def _nuf1_rows(alpha: Sequence[int]) -> tuple[Rows, Rows]:
    al1, al2, al3, al4 = alpha
    rf_f = (
        (-1, 0, 0, al4 - 1),
        (0, -1, 1, al4 - 2),
        (0, al2 - 1, -1, 0),
        (1, al2 - 2, 0, -1),
    )
    rf_g = (
        (-1, 1, al3 - 2, 0),
        (al1 - 1, -1, 0, 0),
        (al1 - 2, 0, -1, 1),
        (0, 0, al3 - 1, -1),
    )
    return rf_f, rf_g


def _uf2(alpha: Sequence[int], n: Generators, f: int, g: int) -> tuple[Rows, Rows] | None:
    _, al2, al3, al4 = alpha
    n1, n2, n3, _ = n
    # row two of RF(f) and row three of RF(g) fix the free entries
    head = f + n2 - (al3 - 2) * n3
    if head <= 0 or head % n1 or (g + n3) % n1:
        return None
    a21 = head // n1
    b41 = (g + n3) // n1 - a21
    if b41 < 0:
        return None
    rf_f = (
        (-1, al2 - 1, 0, 0),
        (a21, -1, al3 - 2, 0),
        (a21 - 1, 0, -1, 1),
        (0, al2 - 2, al3 - 1, -1),
    )
    rf_g = (
        (-1, 0, 0, al4 - 1),
        (0, -1, al3 - 1, al4 - 2),
        (a21 + b41, 0, -1, 0),
        (b41, al2 - 1, 0, -1),
    )
    return rf_f, rf_g


def _uf1(alpha: Sequence[int], n: Generators, g: int) -> tuple[Rows, Rows] | None:
    al1, al2, _, al4 = alpha
    n1, n2, n3, _ = n
    rf_f = (
        (-1, al2 - 1, 0, 0),
        (al1 - 1, -1, 0, 0),
        (al1 - 2, 0, -1, 1),
        (0, al2 - 2, 1, -1),
    )
    # b41 n1 + b32 n2 = g + n1 + n3 from row three of RF(g)
    target = g + n1 + n3
    for b41 in range(1, target // n1 + 1):
        rest = target - b41 * n1
        if rest % n2 or rest // n2 < 1:
            continue
        b32 = rest // n2
        rf_g = (
            (-1, 0, 0, al4 - 1),
            (0, -1, 1, al4 - 2),
            (b41 - 1, b32, -1, 0),
            (b41, b32 - 1, 0, -1),
        )
        if _rows_express(rf_g, n, g):
            return rf_f, rf_g
    return None


# every template takes (alpha, n, f, g); the nUF ones depend on alpha only
_UF_TEMPLATES: tuple[
    tuple[UFCase, Callable[[Sequence[int], Generators, int, int], tuple[Rows, Rows] | None]],
    ...,
] = (
    (UFCase.NUF2, lambda alpha, *_: _type3_rows(alpha)),
    (UFCase.NUF1, lambda alpha, *_: _nuf1_rows(alpha)),
    (UFCase.UF2, _uf2),
    (UFCase.UF1, lambda alpha, n, _f, g: _uf1(alpha, n, g)),
)


def uf_case(semigroup: NumericalSemigroup) -> UFCase:
    """RF-template case of a 4-generated almost symmetric semigroup of type 3.

    Both assignments of the two smaller pseudo-Frobenius numbers to ``(f, f')``
    are tried; cases are tried in the order nUF2, nUF1, UF2, UF1.

    Raises:
        PreconditionError: Wrong family.
        TemplateMismatchError: No case matches.
    """
    _require_type3(semigroup)
    low, high = semigroup.pseudo_frobenius[:2]
    relabelings = list(_relabelings(semigroup))
    for case, template in _UF_TEMPLATES:
        for _, n, alpha in relabelings:
            for f, g in ((low, high), (high, low)):
                pair = template(alpha, n, f, g)
                if pair and _rows_express(pair[0], n, f) and _rows_express(pair[1], n, g):
                    return case
    logger.warning("No RF template case matches %s", semigroup)
    raise TemplateMismatchError(f"{semigroup} matches none of the UF/nUF templates")
