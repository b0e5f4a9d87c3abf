"""Pydantic response models for every outward result.

The CLI prints these models and the MCP tools return them, so both surfaces
share one contract. Field aliases carry the short public names (``F``,
``PF``, ``class``); dump with ``by_alias=True``.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, computed_field


class _Response(BaseModel):
    model_config = ConfigDict(populate_by_name=True, frozen=True)


class SemigroupRecord(_Response):
    """One exported census record."""

    gens: list[int]
    frobenius: int = Field(alias="F")
    genus: int
    pseudo_frobenius: list[int] = Field(alias="PF")
    type: int
    class_: str = Field(alias="class")
    alpha: list[int]
    all_odd: bool


class CensusRow(_Response):
    """Count of almost symmetric semigroups of one embedding dimension and class."""

    edim: int
    class_: str = Field(alias="class")
    count: int = Field(ge=0)

    @property
    def key(self) -> str:
        return f"e{self.edim}/{self.class_}"


class CensusTable(_Response):
    """Census result: query echo, class counts and run metadata."""

    max_gen: int
    edim: list[int]
    parity: str
    min_gen: int = Field(description="Smallest admitted generator")
    classes: list[str] | None = None
    rows: list[CensusRow]
    enumerated: int = Field(description="Semigroups enumerated before class filtering")
    almost_symmetric: int = Field(description="Almost symmetric semigroups among them")
    workers: int
    elapsed_seconds: float
    records: list[SemigroupRecord] = Field(default_factory=list, exclude=True)

    def counts(self) -> dict[str, int]:
        """Counts keyed ``e{d}/{class}``, in row order."""
        return {row.key: row.count for row in self.rows}


class RFMatrixReport(_Response):
    """RF-matrices of one pseudo-Frobenius number, possibly truncated."""

    value: int
    total: int
    truncated: bool
    matrices: list[list[list[int]]]
    unique: bool


class BinomialView(_Response):
    """A binomial relation with its S-degree and text form."""

    gens: list[int]
    lhs: list[int]
    rhs: list[int]
    degree: int
    text: str


class FamilyReport(_Response):
    """Structure parameters extracted for a recognized family."""

    family: str
    perm: list[int]
    gens: list[int]
    alpha: list[int]
    a: list[int] | int | None = None
    b: list[int] | None = None
    f: int | None = None
    parity_case: str | None = None
    uf_case: str | None = None
    parity_check: bool | None = None


class AnalysisResponse(_Response):
    """Full invariant report of a single semigroup."""

    gens: list[int]
    frobenius: int = Field(alias="F")
    genus: int
    pseudo_frobenius: list[int] = Field(alias="PF")
    type: int
    class_: str = Field(alias="class")
    all_odd: bool
    complete_intersection: bool
    alpha: list[int] | None = None
    rf: list[RFMatrixReport] = Field(default_factory=list)
    family: FamilyReport | None = None
    family_error: str | None = None
    ideal: list[BinomialView] | None = None


class BuildResponse(_Response):
    """A constructed semigroup with its inputs and invariants."""

    family: str
    gens: list[int]
    formula_gens: list[int]
    params: dict[str, Any]
    frobenius: int = Field(alias="F")
    pseudo_frobenius: list[int] = Field(alias="PF")
    type: int
    class_: str = Field(alias="class")
    all_odd: bool


class SuiteResult(_Response):
    """Outcome of one verification suite."""

    name: str
    checked: int
    failures: int
    counterexamples: list[str] = Field(default_factory=list)
    witnesses: dict[str, list[int]] = Field(default_factory=dict)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.failures == 0


class VerifyResponse(_Response):
    """Outcome of a verification run."""

    max_gen: int
    suites: list[SuiteResult]
    elapsed_seconds: float

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)


__all__ = [
    "AnalysisResponse",
    "BinomialView",
    "BuildResponse",
    "CensusRow",
    "CensusTable",
    "FamilyReport",
    "RFMatrixReport",
    "SemigroupRecord",
    "SuiteResult",
    "VerifyResponse",
]
