"""Expose the installed distribution version as ``__version__``.

hatch-vcs writes the version into the package metadata at build time; a
source checkout that was never installed reports ``0+unknown``.
"""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version

_DISTRIBUTION = "numerical-semigroups"

try:
    __version__ = version(_DISTRIBUTION)
except PackageNotFoundError:
    __version__ = "0+unknown"

__all__ = ["__version__"]
