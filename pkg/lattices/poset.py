"""Finite posets given by cover relations, backed by a networkx DAG."""

import logging
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

import networkx as nx

from errors import LatticeError
from algebra.monomial import VARIABLE_NAME

logger = logging.getLogger('koszul_toolkit.lattices')

DEFAULT_POSET_BOUND = 6


class Poset:
    """Finite poset on named elements; ``(a, b)`` in a relation list means ``a < b``."""

    def __init__(self, elements: Sequence[str], relations: Iterable[Tuple[str, str]] = ()):
        elements = list(elements)
        self.elements: Tuple[str, ...] = tuple(elements)
        self._hasse = nx.DiGraph()
        if len(set(elements)) != len(elements):
            raise LatticeError(f"Duplicate poset elements: {elements}")
        for name in elements:
            if not VARIABLE_NAME.fullmatch(name):
                raise LatticeError(f"Invalid element name '{name}'")
        graph = nx.DiGraph()
        graph.add_nodes_from(elements)
        for lower, upper in relations:
            for name in (lower, upper):
                if name not in graph:
                    raise LatticeError(f"Unknown element '{name}' in relation {lower} < {upper}")
            if lower == upper:
                raise LatticeError(f"Relation {lower} < {upper} is reflexive")
            graph.add_edge(lower, upper)
        if not nx.is_directed_acyclic_graph(graph):
            raise LatticeError("Relations contain a cycle")
        self._hasse = nx.transitive_reduction(graph)
        self._hasse.add_nodes_from(elements)
        closure = nx.transitive_closure_dag(graph)
        self._above = {name: frozenset(closure.successors(name)) for name in elements}
        self.elements = tuple(self.linear_extension_of(self._hasse))

    @staticmethod
    def linear_extension_of(graph: nx.DiGraph) -> List[str]:
        """Bottom-first linear extension; incomparable elements by name."""
        return list(nx.lexicographical_topological_sort(graph, key=str))

    @classmethod
    def from_relations(cls, elements: Sequence[str], relations: Iterable[Tuple[str, str]]) -> 'Poset':
        """Poset generated by arbitrary relations; redundant ones are dropped."""
        return cls(elements, relations)

    @classmethod
    def antichain(cls, k: int, prefix: str = 'p') -> 'Poset':
        return cls([f"{prefix}{i}" for i in range(1, k + 1)])

    @classmethod
    def chain(cls, k: int, prefix: str = 'p') -> 'Poset':
        names = [f"{prefix}{i}" for i in range(1, k + 1)]
        return cls(names, zip(names, names[1:]))

    def covers(self) -> List[Tuple[str, str]]:
        return sorted(self._hasse.edges())

    def less(self, a: str, b: str) -> bool:
        return b in self._above[a]

    def leq(self, a: str, b: str) -> bool:
        return a == b or self.less(a, b)

    def reverse(self) -> 'Poset':
        return Poset(self.elements, [(upper, lower) for lower, upper in self.covers()])

    def hasse_digraph(self) -> nx.DiGraph:
        return self._hasse.copy()

    def is_down_set(self, subset: Iterable[str]) -> bool:
        subset = set(subset)
        return all(b in subset for a in subset for b in self.elements if self.less(b, a))

    def ideals(self, bound: int = DEFAULT_POSET_BOUND) -> List[FrozenSet[str]]:
        """All down-sets, by size then by sorted names.

        Raises:
            LatticeError: If the poset has more than ``bound`` elements
        """
        if len(self.elements) > bound:
            raise LatticeError(f"Poset has {len(self.elements)} elements, bound is {bound}")
        below = {a: {b for b in self.elements if self.less(b, a)} for a in self.elements}
        found: Set[FrozenSet[str]] = {frozenset()}
        frontier = [frozenset()]
        while frontier:
            grown = []
            for ideal in frontier:
                for a in self.elements:
                    if a not in ideal and below[a] <= ideal:
                        bigger = ideal | {a}
                        if bigger not in found:
                            found.add(bigger)
                            grown.append(bigger)
            frontier = grown
        return sorted(found, key=lambda ideal: (len(ideal), sorted(ideal)))

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"Poset({list(self.elements)}, covers={self.covers()})"


def ideal_name(ideal: Iterable[str]) -> str:
    """Lattice element name of a down-set: ``I_`` followed by its sorted members.

    Underscores inside a member are doubled, so ``{a_b, c}`` and ``{a, b_c}``
    get the distinct names ``I_a__b_c`` and ``I_a_b__c``.
    """
    return "I_" + "_".join(name.replace("_", "__") for name in sorted(ideal))


__all__ = ['DEFAULT_POSET_BOUND', 'Poset', 'ideal_name']
