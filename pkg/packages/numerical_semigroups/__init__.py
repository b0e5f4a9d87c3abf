"""numerical-semigroups: invariants, structure theorems and censuses of numerical semigroups."""

from __future__ import annotations

from numerical_semigroups.version import __version__

__all__ = ["__version__"]
