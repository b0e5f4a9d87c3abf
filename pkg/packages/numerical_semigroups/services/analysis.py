"""Full invariant report of a single semigroup, as printed by ``nsg analyze``."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from numerical_semigroups.config import analyze_rf_cap
from numerical_semigroups.core.base import PreconditionError, SymmetryClass
from numerical_semigroups.core.rf_matrix import rf_matrices
from numerical_semigroups.core.semigroup import alpha_exponents, new_semigroup
from numerical_semigroups.models.responses import (
    AnalysisResponse,
    BinomialView,
    FamilyReport,
    RFMatrixReport,
)
from numerical_semigroups.services.classification import classify, is_complete_intersection
from numerical_semigroups.services.ideals import defining_ideal
from numerical_semigroups.services.structure import (
    bresinsky_params,
    pseudo_sym4_params,
    pseudo_sym_parity_check,
    symmetric_parity_case,
    type3_params,
    uf_case,
)

if TYPE_CHECKING:
    from collections.abc import Iterable

    from numerical_semigroups.core.semigroup import NumericalSemigroup
    from numerical_semigroups.services.classification import SemigroupClass

__all__ = ["analyze", "family_report", "rf_report"]

logger = logging.getLogger(__name__)


def rf_report(semigroup: NumericalSemigroup, f: int, cap: int) -> RFMatrixReport:
    """Up to ``cap`` RF-matrices of ``f`` with the total count."""
    stream = rf_matrices(semigroup, f, cap)
    matrices, truncated = stream.collect()
    return RFMatrixReport(
        value=f,
        total=stream.total,
        truncated=truncated,
        matrices=[[list(row) for row in m.rows] for m in matrices],
        unique=stream.total == 1,
    )


def family_report(semigroup: NumericalSemigroup, klass: SemigroupClass) -> FamilyReport | None:
    """Structure parameters of the recognized 4-generated family, if any.

    Raises:
        PreconditionError: A family matched by class rejects its template.
    """
    if klass.embedding_dimension != 4:
        return None
    if klass.symmetry is SymmetryClass.SYMMETRIC_NON_CI:
        p = bresinsky_params(semigroup)
        return FamilyReport(
            family="bresinsky",
            perm=list(p.perm),
            gens=list(p.gens),
            alpha=list(p.alpha),
            a=list(p.a),
            b=list(p.b),
            parity_case=symmetric_parity_case(p).value,
        )
    if klass.symmetry is SymmetryClass.PSEUDO_SYMMETRIC:
        q = pseudo_sym4_params(semigroup)
        return FamilyReport(
            family="pseudo-symmetric",
            perm=list(q.perm),
            gens=list(q.gens),
            alpha=list(q.alpha),
            a=q.a,
            f=semigroup.frobenius // 2,
            parity_check=pseudo_sym_parity_check(semigroup),
        )
    if klass.is_almost_symmetric and klass.type == 3:
        t = type3_params(semigroup)
        return FamilyReport(
            family="type3",
            perm=list(t.perm),
            gens=list(t.gens),
            alpha=list(t.alpha),
            f=t.f,
            uf_case=uf_case(semigroup).value,
        )
    return None


def analyze(gens: Iterable[int], *, rf_cap: int | None = None) -> AnalysisResponse:
    """Analyze ``⟨gens⟩``: invariants, class, α, RF-matrices, family data and ideal.

    Args:
        gens: Generators in any order; reduced to the minimal set.
        rf_cap: RF-matrices listed per pseudo-Frobenius number; defaults to
            ``NSG_ANALYZE_RF_CAP``.

    Raises:
        SemigroupError: Invalid generators (family mismatches are reported in
            ``family_error`` instead).
    """
    semigroup = new_semigroup(gens)
    klass = classify(semigroup)
    cap = analyze_rf_cap() if rf_cap is None else rf_cap
    alpha = list(alpha_exponents(semigroup)) if semigroup.embedding_dimension >= 2 else None

    family: FamilyReport | None = None
    family_error: str | None = None
    try:
        family = family_report(semigroup, klass)
    except PreconditionError as exc:
        logger.warning("Family extraction failed for %s: %s", semigroup, exc)
        family_error = f"{type(exc).__name__}: {exc}"

    ideal: list[BinomialView] | None = None
    try:
        relations = defining_ideal(semigroup)
    except PreconditionError:
        relations = []
    if relations:
        ideal = [
            BinomialView(
                gens=list(r.gens),
                lhs=list(r.lhs),
                rhs=list(r.rhs),
                degree=r.degree,
                text=str(r),
            )
            for r in relations
        ]

    rf: list[RFMatrixReport] = []
    if semigroup.embedding_dimension >= 2:
        rf = [rf_report(semigroup, f, cap) for f in semigroup.pseudo_frobenius]

    return AnalysisResponse(
        gens=list(semigroup.gens),
        F=semigroup.frobenius,
        genus=semigroup.genus,
        PF=list(semigroup.pseudo_frobenius),
        type=semigroup.type,
        all_odd=semigroup.all_generators_odd,
        complete_intersection=is_complete_intersection(semigroup),
        alpha=alpha,
        rf=rf,
        family=family,
        family_error=family_error,
        ideal=ideal,
        **{"class": klass.label},
    )
