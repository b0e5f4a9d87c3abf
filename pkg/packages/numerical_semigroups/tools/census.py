"""The ``semigroup_census`` tool."""

from __future__ import annotations

from typing import Annotated

from fastmcp.exceptions import ToolError
from pydantic import Field

from numerical_semigroups.core.base import Parity, SemigroupError
from numerical_semigroups.models.responses import CensusTable
from numerical_semigroups.server import mcp
from numerical_semigroups.services.census import CensusQuery, census


@mcp.tool(
    timeout=600.0,
    annotations={
        "readOnlyHint": True,
        "destructiveHint": False,
        "idempotentHint": True,
        "openWorldHint": False,
    },
)
def semigroup_census(
    max_gen: Annotated[int, Field(description="Every generator is at most this bound", ge=3)],
    edim: Annotated[list[int], Field(description="Embedding dimensions to count, each in 2..7")],
    parity: Annotated[Parity, Field(description="odd: only odd generators; any: all")] = Parity.ODD,
    classes: Annotated[
        list[str] | None,
        Field(description="Restrict records to these class labels, e.g. almost-symmetric-type-3"),
    ] = None,
    min_gen: Annotated[
        int | None,
        Field(description="Smallest admitted generator; 5 for odd, 2 for any", ge=2),
    ] = None,
    workers: Annotated[int | None, Field(description="Worker processes", ge=1)] = None,
) -> CensusTable:
    """Count almost symmetric semigroups by embedding dimension and class.

    Output contract: Returns CensusTable with one row per (edim, class) and
    totals; counts are exact and independent of the worker count.
    Side effects: None (read-only, CPU bound).
    Failure modes: ToolError on an invalid query.
    """
    try:
        query = CensusQuery.create(
            max_gen=max_gen, edim=edim, parity=parity, classes=classes, min_gen=min_gen
        )
        return census(query, workers=workers)
    except SemigroupError as e:
        raise ToolError(f"{type(e).__name__}: {e}") from e
