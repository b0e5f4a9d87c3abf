"""Configuration management for numerical-semigroups.

This module handles:
- Environment variable parsing for worker counts and enumeration caps
- Default configuration values
"""

from __future__ import annotations

import functools
import os

__all__ = [
    "DEFAULT_ANALYZE_RF_CAP",
    "DEFAULT_MAX_MULTIPLICITY",
    "DEFAULT_RF_CAP",
    "analyze_rf_cap",
    "max_multiplicity",
    "rf_cap",
    "worker_count",
]

DEFAULT_RF_CAP = 10**6
DEFAULT_ANALYZE_RF_CAP = 32
DEFAULT_MAX_MULTIPLICITY = 10**7


def _positive_int_from_env(name: str, default: int) -> int:
    """Read a positive integer from the environment.

    Args:
        name: Environment variable name.
        default: Value used when the variable is unset or invalid.

    Returns:
        The parsed value, or ``default``.

    Examples:
        >>> os.environ["NSG_RF_CAP"] = "250"
        >>> _positive_int_from_env("NSG_RF_CAP", 10)
        250

        >>> os.environ["NSG_RF_CAP"] = "-3"
        >>> _positive_int_from_env("NSG_RF_CAP", 10)
        10
    """
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


@functools.lru_cache(maxsize=1)
def worker_count() -> int:
    """Number of worker processes for census and verification runs.

    Reads ``NSG_WORKERS``; defaults to the CPU count. ``1`` runs everything
    in-process.
    """
    return _positive_int_from_env("NSG_WORKERS", os.cpu_count() or 1)


@functools.lru_cache(maxsize=1)
def rf_cap() -> int:
    """Default number of RF-matrices streamed before truncation (``NSG_RF_CAP``)."""
    return _positive_int_from_env("NSG_RF_CAP", DEFAULT_RF_CAP)


@functools.lru_cache(maxsize=1)
def analyze_rf_cap() -> int:
    """RF-matrices listed per pseudo-Frobenius number by ``analyze``."""
    return _positive_int_from_env("NSG_ANALYZE_RF_CAP", DEFAULT_ANALYZE_RF_CAP)


@functools.lru_cache(maxsize=1)
def max_multiplicity() -> int:
    """Largest multiplicity for which an Apéry set is materialized."""
    return _positive_int_from_env("NSG_MAX_MULTIPLICITY", DEFAULT_MAX_MULTIPLICITY)
