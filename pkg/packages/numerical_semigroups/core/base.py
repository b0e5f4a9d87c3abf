"""Base types and error hierarchy shared across the package.

Defines the shared type foundation:
- Error class hierarchy for invalid input, violated preconditions and
  failed internal consistency checks
- Enums for parities, symmetry classes and the structural case labels
- Type aliases for generator tuples and factorization vectors
"""

from __future__ import annotations

from enum import StrEnum

__all__ = [
    "MAX_GENERATOR",
    "DegenerateParametersError",
    "Factorization",
    "Generators",
    "InvalidGeneratorsError",
    "InvalidQueryError",
    "InvariantViolationError",
    "NotCofiniteError",
    "NotPseudoFrobeniusError",
    "ParameterError",
    "Parity",
    "PreconditionError",
    "RowParity",
    "SemigroupError",
    "SemigroupTooLargeError",
    "SymmetricParityCase",
    "SymmetryClass",
    "TemplateMismatchError",
    "UFCase",
]

# Generators are always carried as ascending tuples of positive ints.
Generators = tuple[int, ...]

# Coefficient vector over the minimal generators, in generator order.
Factorization = tuple[int, ...]

# Overflow guard: keeps every intermediate product well inside 64 bits.
MAX_GENERATOR = 2**40


class SemigroupError(Exception):
    """Base exception for numerical semigroup computations."""


class InvalidGeneratorsError(SemigroupError):
    """Raised for empty, non-positive or (when required) non-minimal generators."""


class NotCofiniteError(SemigroupError):
    """Raised when the generators have a common divisor greater than one.

    Attributes:
        gcd: The common divisor of the offending generators.
    """

    def __init__(self, message: str, gcd: int) -> None:
        """Initialize with the offending gcd.

        Args:
            message: Human-readable error description.
            gcd: Greatest common divisor of the generators.
        """
        super().__init__(message)
        self.gcd = gcd


class SemigroupTooLargeError(SemigroupError):
    """Raised when inputs exceed the overflow or memory guards."""


class NotPseudoFrobeniusError(SemigroupError):
    """Raised when an RF query is made for a number outside PF(S)."""


class PreconditionError(SemigroupError):
    """Raised when a family extractor is applied outside its family."""


class TemplateMismatchError(PreconditionError):
    """Raised when no relabeling of the generators matches a template."""


class ParameterError(SemigroupError):
    """Raised when builder parameters are outside their domain."""


class DegenerateParametersError(ParameterError):
    """Raised when a builder's output collapses (not minimal, wrong edim, ...)."""


class InvariantViolationError(SemigroupError):
    """Raised when an internal consistency or theorem check fails."""


class InvalidQueryError(SemigroupError):
    """Raised for census queries outside the supported range."""


class Parity(StrEnum):
    """Generator parity filter for enumeration."""

    ODD = "odd"
    ANY = "any"


class RowParity(StrEnum):
    """Parity of the entry sum of an RF-matrix row."""

    EVEN = "even"
    ODD = "odd"


class SymmetryClass(StrEnum):
    """Symmetry class of a numerical semigroup."""

    SYMMETRIC_CI = "symmetric-CI"
    SYMMETRIC_NON_CI = "symmetric-nonCI"
    PSEUDO_SYMMETRIC = "pseudo-symmetric"
    ALMOST_SYMMETRIC = "almost-symmetric"
    NON_ALMOST_SYMMETRIC = "non-almost-symmetric"


class SymmetricParityCase(StrEnum):
    """Parity pattern of the Bresinsky data of a symmetric non-CI semigroup."""

    A = "a"
    B = "b"
    C = "c"
    NONE = "none"


class UFCase(StrEnum):
    """RF-matrix template cases for 4-generated almost symmetric type-3 semigroups."""

    NUF2 = "nUF2"
    NUF1 = "nUF1"
    UF2 = "UF2"
    UF1 = "UF1"
