"""Property suites that check the structure theorems against exhaustive enumeration.

Enumeration suites run over every semigroup with embedding dimension 3 or 4
and generators up to ``max_gen`` (any parity), partitioned and merged like a
census. Construction and oracle suites run on fixed or seeded corpora.
"""

from __future__ import annotations

import functools
import itertools
import logging
import math
import random
import time
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from numerical_semigroups.config import worker_count
from numerical_semigroups.core.base import (
    InvalidQueryError,
    Parity,
    SemigroupError,
    SymmetricParityCase,
    UFCase,
)
from numerical_semigroups.core.presentation import minimal_relation_count
from numerical_semigroups.core.semigroup import (
    from_minimal_generators,
    new_semigroup,
    submonoid_contains,
)
from numerical_semigroups.models.responses import SuiteResult, VerifyResponse
from numerical_semigroups.services.census import (
    CensusQuery,
    enumerate_semigroups,
    map_partitions,
    partition_generators,
)
from numerical_semigroups.services.classification import (
    SemigroupClass,
    classify,
    is_complete_intersection,
)
from numerical_semigroups.services.constructors import build_type3, family_sn
from numerical_semigroups.services.structure import (
    pseudo_sym4_params,
    pseudo_sym_parity_check,
    search_bresinsky_params,
    symmetric_parity_case,
    type3_params,
    uf_case,
)
from numerical_semigroups.telemetry import traced

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable

    from numerical_semigroups.core.semigroup import NumericalSemigroup

__all__ = [
    "ENUMERATION_SUITES",
    "SUITE_NAMES",
    "brute_force_invariants",
    "verify",
]

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 10
DEFAULT_ORACLE_SAMPLE = 500
DEFAULT_ORACLE_MAX_GEN = 50
DEFAULT_SEED = 20170
# both alpha_1, alpha_4 parities occur among odd pseudo-symmetric semigroups from this bound on
ALPHA_PARITY_WITNESS_BOUND = 37
ALPHA_PARITY_WITNESSES = ("alpha1-alpha4-even", "alpha1-alpha4-odd")

# (passed, witness key); None when the property does not apply
Outcome = tuple[bool, str | None] | None


@dataclass
class _Tally:
    checked: int = 0
    failures: int = 0
    counterexamples: list[str] = field(default_factory=list)
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def record(self, semigroup: NumericalSemigroup, outcome: Outcome, detail: str = "") -> None:
        if outcome is None:
            return
        passed, witness = outcome
        self.checked += 1
        if not passed:
            self.failures += 1
            self.counterexamples.append(f"{semigroup}{': ' + detail if detail else ''}")
        if witness is not None:
            self.witness(witness, semigroup.gens)

    def witness(self, key: str, gens: tuple[int, ...]) -> None:
        current = self.witnesses.get(key)
        if current is None or (len(gens), gens) < (len(current), current):
            self.witnesses[key] = gens

    def merge(self, other: _Tally) -> None:
        self.checked += other.checked
        self.failures += other.failures
        self.counterexamples.extend(other.counterexamples)
        for key, gens in other.witnesses.items():
            self.witness(key, gens)

    def result(self, name: str) -> SuiteResult:
        examples = sorted(self.counterexamples)[:MAX_COUNTEREXAMPLES]
        for example in examples:
            logger.warning("%s counterexample: %s", name, example)
        return SuiteResult(
            name=name,
            checked=self.checked,
            failures=self.failures,
            counterexamples=examples,
            witnesses={key: list(gens) for key, gens in sorted(self.witnesses.items())},
        )


def _is_symmetric4(semigroup: NumericalSemigroup) -> bool:
    return semigroup.embedding_dimension == 4 and semigroup.is_symmetric()


def _property_bresinsky(semigroup: NumericalSemigroup, klass: SemigroupClass) -> Outcome:
    if not _is_symmetric4(semigroup):
        return None
    found = search_bresinsky_params(semigroup) is not None
    return found == (not is_complete_intersection(semigroup)), None


def _property_symmetric_parity(semigroup: NumericalSemigroup, klass: SemigroupClass) -> Outcome:
    if not _is_symmetric4(semigroup) or is_complete_intersection(semigroup):
        return None
    params = search_bresinsky_params(semigroup)
    if params is None:
        return False, None
    case = symmetric_parity_case(params)
    return (case is not SymmetricParityCase.NONE) == semigroup.all_generators_odd, case.value


def _property_pseudo_symmetric(semigroup: NumericalSemigroup, klass: SemigroupClass) -> Outcome:
    if semigroup.embedding_dimension != 4 or not semigroup.is_pseudo_symmetric():
        return None
    pseudo_sym4_params(semigroup)
    return pseudo_sym_parity_check(semigroup), None


def _property_alpha_parity(semigroup: NumericalSemigroup, klass: SemigroupClass) -> Outcome:
    if (
        semigroup.embedding_dimension != 4
        or not semigroup.is_pseudo_symmetric()
        or not semigroup.all_generators_odd
        or semigroup.frobenius // 2 % 2 == 0
    ):
        return None
    al1, al2, al3, al4 = pseudo_sym4_params(semigroup).alpha
    passed = al2 % 2 == 1 and al3 % 2 == 1 and al1 % 2 == al4 % 2
    return passed, f"alpha1-alpha4-{'odd' if al1 % 2 else 'even'}"


def _require_witnesses(tally: _Tally, keys: Iterable[str], max_gen: int, bound: int) -> None:
    """Count each witness class absent at or above ``bound`` as a failure."""
    if max_gen < bound:
        return
    for key in keys:
        if key not in tally.witnesses:
            tally.failures += 1
            tally.counterexamples.append(f"no {key} witness with generators up to {max_gen}")


def _property_type_three(semigroup: NumericalSemigroup, klass: SemigroupClass) -> Outcome:
    if (
        semigroup.embedding_dimension != 4
        or semigroup.type != 3
        or not semigroup.all_generators_odd
        or not klass.is_almost_symmetric
    ):
        return None
    params = type3_params(semigroup)
    rebuilt = build_type3(params.alpha).semigroup.gens
    passed = (
        params.f % 2 == 1
        and params.all_alpha_odd
        and uf_case(semigroup) is UFCase.NUF2
        and rebuilt == semigroup.gens
    )
    return passed, None


def _property_alpha_bound(semigroup: NumericalSemigroup, klass: SemigroupClass) -> Outcome:
    gens = semigroup.gens
    if len(gens) < 3:
        return None
    for i, n in enumerate(gens):
        others = gens[:i] + gens[i + 1 :]
        # α_i <= min_k n_k / gcd(n_i, n_k), so only a coprime n_j attaining that cap can equal α_i
        cap = min(g // math.gcd(n, g) for g in others)
        if cap in others and math.gcd(n, cap) == 1:
            reached = any(submonoid_contains(others, k * n) for k in range(1, cap))
            if not reached:
                return False, None
    return True, None


ENUMERATION_SUITES: dict[str, Callable[[NumericalSemigroup, SemigroupClass], Outcome]] = {
    "bresinsky-biconditional": _property_bresinsky,
    "symmetric-parity": _property_symmetric_parity,
    "pseudo-symmetric-parity": _property_pseudo_symmetric,
    "pseudo-symmetric-alpha-parity": _property_alpha_parity,
    "type-three": _property_type_three,
    "alpha-bound": _property_alpha_bound,
}

SUITE_NAMES = (
    *ENUMERATION_SUITES,
    "type-three-construction",
    "apery-oracle",
    "ci-oracle",
)


def _check_partition(
    largest: int, *, query: CensusQuery, names: tuple[str, ...]
) -> dict[str, _Tally]:
    tallies = {name: _Tally() for name in names}
    for gens in partition_generators(largest, query):
        semigroup = from_minimal_generators(gens)
        klass = classify(semigroup)
        for name in names:
            try:
                outcome = ENUMERATION_SUITES[name](semigroup, klass)
            except SemigroupError as exc:
                tallies[name].record(semigroup, (False, None), f"{type(exc).__name__}: {exc}")
            else:
                tallies[name].record(semigroup, outcome)
    return tallies


def _construction_suite() -> _Tally:
    tally = _Tally()
    for alpha in itertools.product((3, 5, 7, 9), repeat=4):
        try:
            built = build_type3(alpha)
        except SemigroupError:
            tally.witness("gcd-rejected", alpha)
            continue
        semigroup = built.semigroup
        try:
            found = type3_params(semigroup).alpha
            label = classify(semigroup).label
        except SemigroupError as exc:
            tally.record(semigroup, (False, None), f"{type(exc).__name__}: {exc}")
            continue
        rotations = {alpha[k:] + alpha[:k] for k in range(4)}
        passed = found in rotations and label == "almost-symmetric-type-3"
        tally.record(semigroup, (passed, None), f"alpha={alpha} recovered {found}")
    for n in range(1, 7):
        semigroup = family_sn(n).semigroup
        f = 15 + 2 ** (n + 3)
        passed = semigroup.pseudo_frobenius == (f, 2 * f, 3 * f)
        tally.record(semigroup, (passed, None), f"n={n}")
    return tally


def brute_force_invariants(gens: Iterable[int]) -> tuple[int, int, tuple[int, ...]]:
    """Frobenius number, genus and PF(S) from a membership table, without Apéry sets.

    Requires ``gcd(gens) = 1``.
    """
    pool = sorted(set(gens))
    smallest = pool[0]
    # a run of ``smallest`` consecutive members means everything beyond is in S
    member = [True]
    run = 1
    x = 0
    while run < smallest:
        x += 1
        inside = any(x >= g and member[x - g] for g in pool)
        member.append(inside)
        run = run + 1 if inside else 0
    frobenius = max((y for y, inside in enumerate(member) if not inside), default=-1)

    def contains(y: int) -> bool:
        return y > frobenius or (y >= 0 and member[y])

    gaps = [y for y in range(1, frobenius + 1) if not contains(y)]
    if frobenius == -1:
        return -1, 0, (-1,)
    pseudo = tuple(y for y in gaps if all(contains(y + g) for g in pool))
    return frobenius, len(gaps), pseudo


def _random_generators(rng: random.Random) -> tuple[int, ...]:
    while True:
        smallest = rng.randint(2, 40)
        size = rng.randint(2, min(6, smallest))
        gens = {smallest, *(rng.randint(smallest + 1, 4 * smallest) for _ in range(size - 1))}
        if math.gcd(*gens) == 1:
            return tuple(sorted(gens))


def _apery_oracle_suite(sample: int, seed: int) -> _Tally:
    tally = _Tally()
    rng = random.Random(seed)
    while tally.checked < sample:
        semigroup = new_semigroup(_random_generators(rng))
        if semigroup.frobenius >= 1000:
            continue
        expected = brute_force_invariants(semigroup.gens)
        actual = (semigroup.frobenius, semigroup.genus, semigroup.pseudo_frobenius)
        tally.record(semigroup, (expected == actual, None), f"expected {expected}, got {actual}")
    return tally


def _ci_oracle_suite(max_gen: int) -> _Tally:
    tally = _Tally()
    query = CensusQuery.create(max_gen=max(3, max_gen), edim={2, 3, 4}, parity=Parity.ANY)
    for semigroup in enumerate_semigroups(query):
        relations = minimal_relation_count(semigroup)
        passed = is_complete_intersection(semigroup) == (
            relations == semigroup.embedding_dimension - 1
        )
        tally.record(semigroup, (passed, None), f"{relations} minimal relations")
    return tally


def verify(
    max_gen: int,
    *,
    suites: Iterable[str] | None = None,
    workers: int | None = None,
    oracle_sample: int = DEFAULT_ORACLE_SAMPLE,
    oracle_max_gen: int = DEFAULT_ORACLE_MAX_GEN,
    seed: int = DEFAULT_SEED,
) -> VerifyResponse:
    """Run the selected property suites (all by default).

    Args:
        max_gen: Generator bound for the enumeration suites.
        suites: Suite names from :data:`SUITE_NAMES`.
        workers: Worker processes; defaults to ``NSG_WORKERS``.
        oracle_sample: Random semigroups checked by the Apéry oracle.
        oracle_max_gen: Generator bound for the CI oracle.
        seed: Seed of the Apéry oracle corpus.
    """
    selected = tuple(SUITE_NAMES if suites is None else suites)
    unknown = [name for name in selected if name not in SUITE_NAMES]
    if unknown:
        raise InvalidQueryError(f"Unknown suites: {unknown}; choose from {list(SUITE_NAMES)}")
    workers = worker_count() if workers is None else max(1, workers)
    enumeration = tuple(name for name in selected if name in ENUMERATION_SUITES)
    started = time.perf_counter()
    tallies: dict[str, _Tally] = {}
    with traced("verify.run", max_gen=max_gen, suites=list(selected)) as span:
        if enumeration:
            query = CensusQuery.create(max_gen=max_gen, edim={3, 4}, parity=Parity.ANY)
            job = functools.partial(_check_partition, query=query, names=enumeration)
            tallies = {name: _Tally() for name in enumeration}
            largest_values = sorted(query.candidates, reverse=True)
            for _, part in map_partitions(job, largest_values, workers):
                for name, tally in part.items():
                    tallies[name].merge(tally)
            if "pseudo-symmetric-alpha-parity" in tallies:
                _require_witnesses(
                    tallies["pseudo-symmetric-alpha-parity"],
                    ALPHA_PARITY_WITNESSES,
                    max_gen,
                    ALPHA_PARITY_WITNESS_BOUND,
                )
        if "type-three-construction" in selected:
            tallies["type-three-construction"] = _construction_suite()
        if "apery-oracle" in selected:
            tallies["apery-oracle"] = _apery_oracle_suite(oracle_sample, seed)
        if "ci-oracle" in selected:
            tallies["ci-oracle"] = _ci_oracle_suite(oracle_max_gen)
        results = [tallies[name].result(name) for name in selected]
        span.set_attribute("verify.failures", sum(r.failures for r in results))
    elapsed = time.perf_counter() - started
    logger.info(
        "verify max_gen=%s: %s suites, %s failures in %.2fs",
        max_gen,
        len(results),
        sum(r.failures for r in results),
        elapsed,
    )
    return VerifyResponse(max_gen=max_gen, suites=results, elapsed_seconds=elapsed)
