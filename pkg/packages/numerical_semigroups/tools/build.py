"""The ``semigroup_build`` tool -- forward constructions of the parametrized families."""

from __future__ import annotations

from enum import StrEnum
from typing import Annotated

from fastmcp.exceptions import ToolError
from pydantic import Field

from numerical_semigroups.core.base import SemigroupError
from numerical_semigroups.models.responses import BuildResponse
from numerical_semigroups.server import mcp
from numerical_semigroups.services.constructors import (
    Construction,
    build_pseudo_sym3,
    build_response,
    build_symmetric_bresinsky,
    build_type3,
    family_sn,
)


class Family(StrEnum):
    """Families accepted by ``semigroup_build``."""

    TYPE3 = "type3"
    BRESINSKY = "bresinsky"
    PSYM3 = "psym3"
    SN = "sn"


def _construct(
    family: Family,
    alpha: list[int] | None,
    a: list[int] | None,
    b: list[int] | None,
    n: int | None,
) -> Construction:
    if family is Family.TYPE3:
        if alpha is None:
            raise ToolError("type3 needs alpha (four odd integers > 1)")
        return build_type3(alpha)
    if family is Family.BRESINSKY:
        if a is None or b is None:
            raise ToolError("bresinsky needs a and b (four positive integers each)")
        return build_symmetric_bresinsky(a, b)
    if family is Family.PSYM3:
        if alpha is None or len(alpha) != 3:
            raise ToolError("psym3 needs alpha as three positive integers")
        return build_pseudo_sym3(*alpha)
    if n is None:
        raise ToolError("sn needs n")
    return family_sn(n)


@mcp.tool(
    timeout=60.0,
    annotations={
        "readOnlyHint": True,
        "destructiveHint": False,
        "idempotentHint": True,
        "openWorldHint": False,
    },
)
def semigroup_build(
    family: Annotated[Family, Field(description="Family to build: type3, bresinsky, psym3 or sn")],
    alpha: Annotated[
        list[int] | None, Field(description="type3: four odd alpha_i > 1; psym3: alpha, beta, gamma")
    ] = None,
    a: Annotated[list[int] | None, Field(description="bresinsky: a_1..a_4")] = None,
    b: Annotated[list[int] | None, Field(description="bresinsky: b_1..b_4")] = None,
    n: Annotated[int | None, Field(description="sn: the index n >= 1")] = None,
) -> BuildResponse:
    """Build a semigroup of a parametrized family and check its postconditions.

    Output contract: Returns BuildResponse with the minimal generators, the
    generators in formula order, F, PF, type and class.
    Side effects: None (read-only).
    Failure modes: ToolError on missing or invalid parameters, degenerate
    generators, or a failed postcondition.
    """
    try:
        return build_response(_construct(family, alpha, a, b, n))
    except SemigroupError as e:
        raise ToolError(f"{type(e).__name__}: {e}") from e
