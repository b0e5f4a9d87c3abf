"""Centralized logging configuration for numerical-semigroups.

Configures loguru with a JSONL file sink and an optional stderr sink, and
bridges stdlib ``logging`` for the ``numerical_semigroups.*`` namespace through
:class:`InterceptHandler`, so library modules keep using
``logging.getLogger(__name__)``.

.. important::
    This file shadows stdlib ``logging``; the stdlib module is imported first
    under a private name.
"""

from __future__ import annotations

import inspect
import logging as _stdlib_logging
import os
import sys
from pathlib import Path

from loguru import logger

__all__ = ["InterceptHandler", "configure_logging"]

_DEFAULT_LOG_DIR = Path.home() / ".local" / "share" / "numerical-semigroups" / "logs"
_DEFAULT_LOG_LEVEL = "WARNING"
_NAMESPACE = "numerical_semigroups"
_TRUTHY = {"1", "true", "yes"}
_CONFIGURED = False


def _is_testing() -> bool:
    """Detect a pytest run (module loaded or a test currently executing)."""
    return "pytest" in sys.modules or "PYTEST_CURRENT_TEST" in os.environ


def configure_logging(*, verbose: bool = False) -> None:
    """Configure loguru sinks once per process.

    Environment variables:
        NSG_LOG_LEVEL: Override the default WARNING level.
        NSG_LOG_FILE: Override the JSONL log file path.
        NSG_LOG_CONSOLE: ``"1"``, ``"true"`` or ``"yes"`` enables stderr output.

    Args:
        verbose: Force the stderr sink at DEBUG (the CLI ``--verbose`` flag).
    """
    global _CONFIGURED  # noqa: PLW0603
    if _CONFIGURED:
        return
    _CONFIGURED = True

    logger.remove()
    level = os.environ.get("NSG_LOG_LEVEL", _DEFAULT_LOG_LEVEL).upper()

    override = os.environ.get("NSG_LOG_FILE", "").strip()
    log_file = Path(override) if override else _DEFAULT_LOG_DIR / "nsg.jsonl"
    if not _is_testing():
        try:
            log_file.parent.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            print(f"numerical-semigroups: file logging disabled ({exc})", file=sys.stderr)
        else:
            logger.add(
                log_file,
                level=level,
                serialize=True,
                rotation="10 MB",
                retention=5,
                enqueue=True,
                diagnose=False,
            )

    if verbose or os.environ.get("NSG_LOG_CONSOLE", "").strip().lower() in _TRUTHY:
        logger.add(
            sys.stderr,
            level="DEBUG" if verbose else level,
            format=(
                "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
                "<cyan>{name}</cyan> - <level>{message}</level>"
            ),
            colorize=True,
            diagnose=False,
            enqueue=False,
        )

    _install_intercept_handler()


class InterceptHandler(_stdlib_logging.Handler):
    """Route stdlib logging records of the package namespace to loguru.

    The originating logger name is bound as ``extra["source"]``.
    """

    def emit(self, record: _stdlib_logging.LogRecord) -> None:
        """Forward a stdlib log record to loguru."""
        try:
            level: str | int = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = inspect.currentframe(), 0
        while frame is not None and (depth == 0 or frame.f_code.co_filename == _stdlib_logging.__file__):
            frame = frame.f_back
            depth += 1

        logger.bind(source=record.name).opt(depth=depth, exception=record.exc_info).log(
            level, record.getMessage()
        )


def _install_intercept_handler() -> None:
    ns_logger = _stdlib_logging.getLogger(_NAMESPACE)
    ns_logger.handlers = [InterceptHandler()]
    ns_logger.setLevel(_stdlib_logging.DEBUG)
    ns_logger.propagate = False
