"""MCP server exposing semigroup analysis, construction, census and verification.

Thin registration shell: FastMCP init, tool imports, and main().
Tool logic lives in ``tools/``, computation in ``services/``.
"""

from __future__ import annotations

from fastmcp import FastMCP

from numerical_semigroups.logging import configure_logging

# ---------------------------------------------------------------------------
# Defined BEFORE the tool imports so ``from numerical_semigroups.server import mcp``
# resolves inside the tool modules.
# ---------------------------------------------------------------------------
mcp = FastMCP("numerical-semigroups", mask_error_details=False)

from numerical_semigroups.tools.analyze import semigroup_analyze  # noqa: E402
from numerical_semigroups.tools.build import semigroup_build  # noqa: E402
from numerical_semigroups.tools.census import semigroup_census  # noqa: E402
from numerical_semigroups.tools.verify import semigroup_verify  # noqa: E402

__all__ = [
    "main",
    "mcp",
    "semigroup_analyze",
    "semigroup_build",
    "semigroup_census",
    "semigroup_verify",
]


def main() -> None:  # pragma: no cover
    """Entry point for the MCP server."""
    configure_logging()
    mcp.run()
