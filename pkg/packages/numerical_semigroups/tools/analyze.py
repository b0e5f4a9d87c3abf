"""The ``semigroup_analyze`` tool."""

from __future__ import annotations

from typing import Annotated

from fastmcp.exceptions import ToolError
from pydantic import Field

from numerical_semigroups.core.base import SemigroupError
from numerical_semigroups.models.responses import AnalysisResponse
from numerical_semigroups.server import mcp
from numerical_semigroups.services.analysis import analyze


@mcp.tool(
    timeout=60.0,
    annotations={
        "readOnlyHint": True,
        "destructiveHint": False,
        "idempotentHint": True,
        "openWorldHint": False,
    },
)
def semigroup_analyze(
    gens: Annotated[list[int], Field(description="Generators of the semigroup, any order, gcd 1")],
    rf_cap: Annotated[
        int | None, Field(description="RF-matrices listed per pseudo-Frobenius number", ge=1)
    ] = None,
) -> AnalysisResponse:
    """Compute the invariants and structure data of a numerical semigroup.

    Output contract: Returns AnalysisResponse with F, genus, PF, type, class,
    alpha, RF-matrices, the recognized family parameters and defining ideal.
    Side effects: None (read-only).
    Failure modes: ToolError on invalid generators or an oversized semigroup.
    """
    try:
        return analyze(gens, rf_cap=rf_cap)
    except SemigroupError as e:
        raise ToolError(f"{type(e).__name__}: {e}") from e
