"""Census of numerical semigroups by generator bound, embedding dimension and parity.

Minimal generating sets are enumerated in ascending order, partitioned by
their largest generator ``L``. Within a partition a depth-first search keeps
the monoid generated so far as a Python-int bitset over ``[0, L]``; a new
candidate is admitted only when its bit is clear, and a branch is dropped as
soon as ``L`` becomes representable. Because candidates grow, this is exact
minimality, so no semigroup is emitted twice.
"""

from __future__ import annotations

import functools
import logging
import math
import re
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import TYPE_CHECKING, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from numerical_semigroups.config import worker_count
from numerical_semigroups.core.base import Generators, InvalidQueryError, Parity, SymmetryClass
from numerical_semigroups.core.semigroup import alpha_exponents, from_minimal_generators
from numerical_semigroups.models.responses import CensusRow, CensusTable, SemigroupRecord
from numerical_semigroups.services.classification import SemigroupClass, classify
from numerical_semigroups.telemetry import traced

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator

    from numerical_semigroups.core.semigroup import NumericalSemigroup

__all__ = [
    "SUPPORTED_EDIMS",
    "CensusQuery",
    "census",
    "census_class_key",
    "enumerate_semigroups",
    "map_partitions",
    "partition_generators",
    "semigroup_record",
]

logger = logging.getLogger(__name__)

SUPPORTED_EDIMS = frozenset(range(2, 8))

_LABEL_PATTERN = re.compile(r"almost-symmetric-type-([3-9]|[1-9]\d+)")
_PLAIN_LABELS = frozenset(
    label.value for label in SymmetryClass if label is not SymmetryClass.ALMOST_SYMMETRIC
)

_Result = TypeVar("_Result")


class CensusQuery(BaseModel):
    """Census query: generator bound, target embedding dimensions, parity, class filter."""

    model_config = ConfigDict(frozen=True)

    max_gen: int = Field(ge=3, description="Every generator is at most this bound")
    edim: frozenset[int]
    parity: Parity = Parity.ODD
    classes: frozenset[str] | None = None
    min_gen: int | None = Field(
        default=None,
        ge=2,
        description="Every generator is at least this bound; 5 for odd censuses, 2 otherwise",
    )

    @field_validator("edim")
    @classmethod
    def _edim_supported(cls, value: frozenset[int]) -> frozenset[int]:
        if not value or not value <= SUPPORTED_EDIMS:
            msg = f"edim must be a non-empty subset of 2..7, got {sorted(value)}"
            raise ValueError(msg)
        return value

    @field_validator("classes")
    @classmethod
    def _classes_known(cls, value: frozenset[str] | None) -> frozenset[str] | None:
        if value is None:
            return None
        unknown = [c for c in value if c not in _PLAIN_LABELS and not _LABEL_PATTERN.fullmatch(c)]
        if unknown:
            msg = f"Unknown class labels: {sorted(unknown)}"
            raise ValueError(msg)
        return value

    @classmethod
    def create(
        cls,
        max_gen: int,
        edim: Iterable[int],
        parity: Parity | str = Parity.ODD,
        classes: Iterable[str] | None = None,
        min_gen: int | None = None,
    ) -> CensusQuery:
        """Validate and build a query.

        Raises:
            InvalidQueryError: Any field is out of range.
        """
        try:
            return cls(
                max_gen=max_gen,
                edim=frozenset(edim),
                parity=Parity(parity),
                classes=None if classes is None else frozenset(classes),
                min_gen=min_gen,
            )
        except (ValidationError, ValueError) as exc:
            raise InvalidQueryError(str(exc)) from exc

    @property
    def candidates(self) -> list[int]:
        """Candidate generator values in ascending order.

        Odd censuses leave out multiplicity three unless ``min_gen`` asks for it.
        """
        if self.parity is Parity.ODD:
            low = max(self.min_gen or 5, 3)
            return list(range(low | 1, self.max_gen + 1, 2))
        return list(range(self.min_gen or 2, self.max_gen + 1))

    @property
    def lowest(self) -> int:
        """Smallest generator the query admits."""
        if self.min_gen is not None:
            return self.min_gen
        return 5 if self.parity is Parity.ODD else 2


def _close(reach: int, value: int, mask: int, limit: int) -> int:
    # doubling shifts: after k steps the multiples 0..2^k-1 of value are added
    shift = value
    while shift <= limit:
        reach |= (reach << shift) & mask
        shift <<= 1
    return reach


def partition_generators(largest: int, query: CensusQuery) -> Iterator[Generators]:
    """Minimal generating sets admitted by ``query`` whose largest element is ``largest``.

    Yields ascending tuples in lexicographic order.
    """
    below = [c for c in query.candidates if c < largest]
    sizes = query.edim
    deepest = max(sizes) - 1
    mask = (1 << (largest + 1)) - 1

    def visit(start: int, chosen: tuple[int, ...], reach: int) -> Iterator[Generators]:
        if len(chosen) + 1 in sizes and math.gcd(largest, *chosen) == 1:
            yield (*chosen, largest)
        if len(chosen) == deepest:
            return
        for k in range(start, len(below)):
            value = below[k]
            if reach >> value & 1:
                continue
            extended = _close(reach, value, mask, largest)
            if extended >> largest & 1:
                continue
            yield from visit(k + 1, (*chosen, value), extended)

    yield from visit(0, (), 1)


def enumerate_semigroups(query: CensusQuery) -> Iterator[NumericalSemigroup]:
    """Stream every semigroup admitted by ``query``, ordered by largest generator.

    Single-process; the class filter is not applied.
    """
    for largest in query.candidates:
        for gens in partition_generators(largest, query):
            yield from_minimal_generators(gens)


def census_class_key(klass: SemigroupClass) -> str | None:
    """Census row key of an almost symmetric class, ``None`` otherwise.

    Embedding dimension up to three is split by type only; from four on the
    symmetric ones are split into ``t1-nonci`` and ``ci``.
    """
    if not klass.is_almost_symmetric:
        return None
    if klass.embedding_dimension >= 4 and klass.type == 1:
        return "ci" if klass.symmetry is SymmetryClass.SYMMETRIC_CI else "t1-nonci"
    return f"t{klass.type}"


def _row_keys(edim: int, observed: Iterable[str]) -> list[str]:
    top = {2: 1, 3: 2, 4: 3}.get(edim, edim)
    seen_types = [int(key[1:]) for key in observed if key.startswith("t") and key[1:].isdigit()]
    top = max([top, *seen_types])
    if edim <= 3:
        return [f"t{t}" for t in range(1, top + 1)]
    return ["t1-nonci", "ci", *(f"t{t}" for t in range(2, top + 1))]


def semigroup_record(semigroup: NumericalSemigroup, klass: SemigroupClass) -> SemigroupRecord:
    """Export record of ``semigroup``."""
    return SemigroupRecord(
        gens=list(semigroup.gens),
        F=semigroup.frobenius,
        genus=semigroup.genus,
        PF=list(semigroup.pseudo_frobenius),
        type=semigroup.type,
        **{"class": klass.label},
        alpha=list(alpha_exponents(semigroup)),
        all_odd=semigroup.all_generators_odd,
    )


def _count_partition(
    largest: int, *, query: CensusQuery, with_records: bool
) -> tuple[Counter[tuple[int, str]], int, int, list[SemigroupRecord]]:
    logger.debug("census partition L=%s started", largest)
    counts: Counter[tuple[int, str]] = Counter()
    records: list[SemigroupRecord] = []
    enumerated = almost_symmetric = 0
    for gens in partition_generators(largest, query):
        semigroup = from_minimal_generators(gens)
        enumerated += 1
        if semigroup.is_almost_symmetric():
            almost_symmetric += 1
        klass = classify(semigroup)
        if query.classes is not None and klass.label not in query.classes:
            continue
        key = census_class_key(klass)
        if key is not None:
            counts[semigroup.embedding_dimension, key] += 1
        if with_records and (key is not None or query.classes is not None):
            records.append(semigroup_record(semigroup, klass))
    logger.debug("census partition L=%s finished: %s semigroups", largest, enumerated)
    return counts, enumerated, almost_symmetric, records


def map_partitions(
    func: Callable[[int], _Result], largest_values: list[int], workers: int
) -> Iterator[tuple[int, _Result]]:
    """Apply ``func`` to each partition, yielding ``(largest, result)`` in input order.

    ``func`` must be picklable when ``workers > 1``.
    """
    if workers <= 1 or len(largest_values) <= 1:
        for largest in largest_values:
            yield largest, func(largest)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from zip(largest_values, pool.map(func, largest_values), strict=True)


def census(
    query: CensusQuery, *, workers: int | None = None, with_records: bool = False
) -> CensusTable:
    """Count almost symmetric semigroups per embedding dimension and class.

    Args:
        query: Validated census query.
        workers: Worker processes; defaults to ``NSG_WORKERS``.
        with_records: Also collect one record per semigroup passing the class
            filter (almost symmetric ones unless the filter names others),
            sorted by ``(edim, gens)``.

    Returns:
        Exact counts; one run with one worker and one with many give equal tables.
    """
    workers = worker_count() if workers is None else max(1, workers)
    # heaviest partitions first; results are merged in a fixed order regardless
    largest_values = sorted(query.candidates, reverse=True)
    job = functools.partial(_count_partition, query=query, with_records=with_records)
    started = time.perf_counter()
    counts: Counter[tuple[int, str]] = Counter()
    records: list[SemigroupRecord] = []
    enumerated = almost_symmetric = 0
    with traced(
        "census.run",
        max_gen=query.max_gen,
        edim=sorted(query.edim),
        parity=query.parity.value,
        min_gen=query.lowest,
    ) as run_span:
        for largest, result in map_partitions(job, largest_values, workers):
            part_counts, part_enumerated, part_as, part_records = result
            with traced("census.partition", largest=largest, enumerated=part_enumerated):
                counts.update(part_counts)
                enumerated += part_enumerated
                almost_symmetric += part_as
                records.extend(part_records)
        run_span.set_attribute("census.enumerated", enumerated)
        run_span.set_attribute("census.almost_symmetric", almost_symmetric)
    elapsed = time.perf_counter() - started

    rows: list[CensusRow] = []
    for edim in sorted(query.edim):
        observed = [key for (e, key) in counts if e == edim]
        rows.extend(
            CensusRow(edim=edim, count=counts[edim, key], **{"class": key})
            for key in _row_keys(edim, observed)
        )
    records.sort(key=lambda r: (len(r.gens), r.gens))
    logger.info(
        "census max_gen=%s edim=%s parity=%s: %s enumerated, %s almost symmetric in %.2fs",
        query.max_gen,
        sorted(query.edim),
        query.parity.value,
        enumerated,
        almost_symmetric,
        elapsed,
    )
    return CensusTable(
        max_gen=query.max_gen,
        edim=sorted(query.edim),
        parity=query.parity.value,
        min_gen=query.lowest,
        classes=None if query.classes is None else sorted(query.classes),
        rows=rows,
        enumerated=enumerated,
        almost_symmetric=almost_symmetric,
        workers=workers,
        elapsed_seconds=elapsed,
        records=records,
    )
