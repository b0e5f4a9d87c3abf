"""The ``semigroup_verify`` tool."""

from __future__ import annotations

from typing import Annotated

from fastmcp.exceptions import ToolError
from pydantic import Field

from numerical_semigroups.core.base import SemigroupError
from numerical_semigroups.models.responses import VerifyResponse
from numerical_semigroups.server import mcp
from numerical_semigroups.services.verification import verify


@mcp.tool(
    timeout=600.0,
    annotations={
        "readOnlyHint": True,
        "destructiveHint": False,
        "idempotentHint": True,
        "openWorldHint": False,
    },
)
def semigroup_verify(
    max_gen: Annotated[int, Field(description="Generator bound of the enumeration suites", ge=3)],
    suites: Annotated[list[str] | None, Field(description="Suite names; all when omitted")] = None,
    workers: Annotated[int | None, Field(description="Worker processes", ge=1)] = None,
) -> VerifyResponse:
    """Check the structure theorems exhaustively and against brute-force oracles.

    Output contract: Returns VerifyResponse with per-suite counts, up to ten
    counterexamples and witnesses; ``passed`` is false on any failure.
    Side effects: None (read-only, CPU bound).
    Failure modes: ToolError on unknown suite names.
    """
    try:
        return verify(max_gen, suites=suites, workers=workers)
    except SemigroupError as e:
        raise ToolError(f"{type(e).__name__}: {e}") from e
