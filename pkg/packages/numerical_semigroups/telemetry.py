"""OpenTelemetry spans around census and verification runs.

Span attributes are namespaced by the first segment of the span name, so
``traced("census.run", max_gen=100)`` sets ``census.max_gen``. Without a
configured SDK every span is a no-op.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import TYPE_CHECKING

from opentelemetry import trace

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from opentelemetry.trace import Span, Tracer

    AttributeValue = str | int | float | bool | Sequence[int] | Sequence[str]

_TRACER_NAME = "numerical-semigroups"


def get_tracer() -> Tracer:
    """Package tracer."""
    return trace.get_tracer(_TRACER_NAME)


@contextmanager
def traced(name: str, **attributes: AttributeValue) -> Iterator[Span]:
    """Open ``name`` as the current span with namespaced ``attributes``."""
    prefix = name.split(".", 1)[0]
    with get_tracer().start_as_current_span(
        name, attributes={f"{prefix}.{key}": value for key, value in attributes.items()}
    ) as span:
        yield span


__all__ = ["get_tracer", "traced"]
