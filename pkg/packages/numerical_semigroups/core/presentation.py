"""Minimal-presentation cardinality by Betti elements.

For ``s ∈ S`` the factorization graph has the factorizations of ``s`` as
vertices, two of them adjacent when they share a generator. A minimal
presentation has ``Σ_s (components(s) - 1)`` relations; ``s`` contributes only
when its graph is disconnected (a Betti element). Used as an independent
oracle for the complete-intersection test, at small scale.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import networkx as nx

from numerical_semigroups.core.rf_matrix import factorizations

if TYPE_CHECKING:
    from numerical_semigroups.core.semigroup import NumericalSemigroup

__all__ = ["betti_elements", "factorization_graph", "minimal_relation_count"]


def factorization_graph(semigroup: NumericalSemigroup, value: int) -> nx.Graph:
    """Graph on the factorizations of ``value``; edges join shared supports."""
    facts = factorizations(semigroup, value)
    graph = nx.Graph()
    graph.add_nodes_from(facts)
    for j in range(semigroup.embedding_dimension):
        support = [z for z in facts if z[j]]
        graph.add_edges_from((support[0], z) for z in support[1:])
    return graph


def _component_excess(semigroup: NumericalSemigroup) -> dict[int, int]:
    gens = semigroup.gens
    if len(gens) < 2:
        return {}
    bound = semigroup.frobenius + gens[-2] + gens[-1]
    excess: dict[int, int] = {}
    for value in range(2 * gens[0], bound + 1):
        if not semigroup.contains(value):
            continue
        # every factorization shares the generator when only one can be removed
        if sum(1 for g in gens if semigroup.contains(value - g)) < 2:
            continue
        components = nx.number_connected_components(factorization_graph(semigroup, value))
        if components > 1:
            excess[value] = components - 1
    return excess


def betti_elements(semigroup: NumericalSemigroup) -> list[int]:
    """Elements whose factorization graph is disconnected, ascending."""
    return sorted(_component_excess(semigroup))


def minimal_relation_count(semigroup: NumericalSemigroup) -> int:
    """Cardinality of a minimal presentation of ``semigroup``."""
    return sum(_component_excess(semigroup).values())
