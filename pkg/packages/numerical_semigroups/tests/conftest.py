"""Shared pytest fixtures for numerical_semigroups testing.

Semigroups used across modules are built once per session; every config
reader is an ``lru_cache`` and is cleared around each test so environment
overrides stay local.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest
from loguru import logger

from numerical_semigroups.config import analyze_rf_cap, max_multiplicity, rf_cap, worker_count
from numerical_semigroups.core.semigroup import new_semigroup
from numerical_semigroups.tests.golden import (
    BRESINSKY_ODD,
    PSEUDO_SYMMETRIC,
    PSEUDO_SYMMETRIC_LARGE,
    TYPE_THREE_EVEN,
    TYPE_THREE_ODD,
)

if TYPE_CHECKING:
    from collections.abc import Generator

    from _pytest.logging import LogCaptureFixture

    from numerical_semigroups.core.semigroup import NumericalSemigroup


@pytest.fixture(scope="session")
def two_three() -> NumericalSemigroup:
    """⟨2,3⟩, the smallest proper numerical semigroup."""
    return new_semigroup((2, 3))


@pytest.fixture(scope="session")
def frobenius_25() -> NumericalSemigroup:
    """⟨8,10,11,13⟩ with F=25 and two RF-matrices of F."""
    return new_semigroup((8, 10, 11, 13))


@pytest.fixture(scope="session")
def bresinsky_odd() -> NumericalSemigroup:
    return new_semigroup(BRESINSKY_ODD)


@pytest.fixture(scope="session")
def pseudo_symmetric() -> NumericalSemigroup:
    return new_semigroup(PSEUDO_SYMMETRIC)


@pytest.fixture(scope="session")
def pseudo_symmetric_large() -> NumericalSemigroup:
    return new_semigroup(PSEUDO_SYMMETRIC_LARGE)


@pytest.fixture(scope="session")
def type_three_odd() -> NumericalSemigroup:
    return new_semigroup(TYPE_THREE_ODD)


@pytest.fixture(scope="session")
def type_three_even() -> NumericalSemigroup:
    return new_semigroup(TYPE_THREE_EVEN)


# ==============================================================================
# Environment and logging
# ==============================================================================


@pytest.fixture(autouse=True)
def _clear_config_cache() -> Generator[None, None, None]:
    """Reset cached config readers before and after every test."""
    readers = (worker_count, rf_cap, analyze_rf_cap, max_multiplicity)
    for reader in readers:
        reader.cache_clear()
    yield
    for reader in readers:
        reader.cache_clear()


@pytest.fixture
def clean_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Remove every NSG_* variable for the duration of a test.

    Args:
        monkeypatch: Pytest monkeypatch fixture
    """
    for name in (
        "NSG_WORKERS",
        "NSG_RF_CAP",
        "NSG_ANALYZE_RF_CAP",
        "NSG_MAX_MULTIPLICITY",
        "NSG_LOG_LEVEL",
        "NSG_LOG_FILE",
        "NSG_LOG_CONSOLE",
    ):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def caplog_loguru(caplog: LogCaptureFixture) -> Generator[LogCaptureFixture, None, None]:
    """Propagate loguru records into pytest's caplog.

    Args:
        caplog: Pytest log capture fixture

    Yields:
        The caplog fixture, receiving loguru output
    """
    handler_id = logger.add(caplog.handler, format="{message}", level=0)
    yield caplog
    logger.remove(handler_id)
