"""Core numerical semigroup arithmetic: generators, Apéry sets, RF-matrices."""

from __future__ import annotations

from numerical_semigroups.core.base import (
    Generators,
    InvalidGeneratorsError,
    InvariantViolationError,
    NotCofiniteError,
    NotPseudoFrobeniusError,
    ParameterError,
    PreconditionError,
    SemigroupError,
    SemigroupTooLargeError,
    TemplateMismatchError,
)
from numerical_semigroups.core.rf_matrix import (
    RFMatrix,
    RFMatrixStream,
    factorizations,
    has_unique_rf_matrix,
    rf_matrices,
    rf_rows,
    row_parity,
)
from numerical_semigroups.core.semigroup import (
    NumericalSemigroup,
    alpha_exponents,
    minimalize_generators,
    new_semigroup,
    submonoid_contains,
)

__all__ = [
    "Generators",
    "InvalidGeneratorsError",
    "InvariantViolationError",
    "NotCofiniteError",
    "NotPseudoFrobeniusError",
    "NumericalSemigroup",
    "ParameterError",
    "PreconditionError",
    "RFMatrix",
    "RFMatrixStream",
    "SemigroupError",
    "SemigroupTooLargeError",
    "TemplateMismatchError",
    "alpha_exponents",
    "factorizations",
    "has_unique_rf_matrix",
    "minimalize_generators",
    "new_semigroup",
    "rf_matrices",
    "rf_rows",
    "row_parity",
    "submonoid_contains",
]
