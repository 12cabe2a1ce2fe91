"""Finite distributive lattices with meet and join tables."""

import itertools
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from errors import LatticeError
from lattices.poset import DEFAULT_POSET_BOUND, Poset, ideal_name

logger = logging.getLogger('koszul_toolkit.lattices')

DEFAULT_LATTICE_BOUND = 16


class DistributiveLattice:
    """Finite lattice whose order comes from a poset on its elements.

    Construction fills the meet and join tables and checks distributivity on
    every triple.

    Raises:
        LatticeError: If the order is not a lattice or not distributive
    """

    def __init__(self, order: Poset, source: Optional[Poset] = None, bound: int = DEFAULT_LATTICE_BOUND):
        if len(order) > bound:
            raise LatticeError(f"Lattice has {len(order)} elements, bound is {bound}")
        self.order = order
        self.source = source
        self.elements: Tuple[str, ...] = order.elements
        self._meet: Dict[Tuple[str, str], str] = {}
        self._join: Dict[Tuple[str, str], str] = {}
        for a, b in itertools.product(self.elements, repeat=2):
            self._meet[a, b] = self._extremal_bound(a, b, upper=False)
            self._join[a, b] = self._extremal_bound(a, b, upper=True)
        self._check_distributive()

    def _extremal_bound(self, a: str, b: str, upper: bool) -> str:
        if upper:
            bounds = [c for c in self.elements if self.leq(a, c) and self.leq(b, c)]
            best = [c for c in bounds if all(self.leq(c, d) for d in bounds)]
        else:
            bounds = [c for c in self.elements if self.leq(c, a) and self.leq(c, b)]
            best = [c for c in bounds if all(self.leq(d, c) for d in bounds)]
        if len(best) != 1:
            kind = "join" if upper else "meet"
            raise LatticeError(f"Elements {a} and {b} have no {kind}")
        return best[0]

    def _check_distributive(self) -> None:
        for a, b, c in itertools.product(self.elements, repeat=3):
            if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)):
                raise LatticeError(f"Not distributive at ({a}, {b}, {c})")

    @classmethod
    def from_poset(cls, poset: Poset, poset_bound: int = DEFAULT_POSET_BOUND,
                   lattice_bound: int = DEFAULT_LATTICE_BOUND) -> 'DistributiveLattice':
        """Lattice of the down-sets of ``poset`` ordered by inclusion."""
        ideals = poset.ideals(poset_bound)
        if len(ideals) > lattice_bound:
            raise LatticeError(f"{len(ideals)} down-sets exceed the lattice bound {lattice_bound}")
        names = {ideal: ideal_name(ideal) for ideal in ideals}
        covers = [
            (names[small], names[big])
            for small, big in itertools.permutations(ideals, 2)
            if small < big and len(big) == len(small) + 1
        ]
        lattice = cls(Poset([names[ideal] for ideal in ideals], covers), source=poset, bound=lattice_bound)
        logger.debug(f"Lattice of {len(ideals)} down-sets built from {poset!r}")
        return lattice

    @classmethod
    def from_covers(cls, elements: Sequence[str], covers: Iterable[Tuple[str, str]],
                    bound: int = DEFAULT_LATTICE_BOUND) -> 'DistributiveLattice':
        return cls(Poset(elements, covers), bound=bound)

    def leq(self, a: str, b: str) -> bool:
        return self.order.leq(a, b)

    def meet(self, a: str, b: str) -> str:
        return self._meet[a, b]

    def join(self, a: str, b: str) -> str:
        return self._join[a, b]

    @property
    def bottom(self) -> str:
        return self.elements[0]

    @property
    def top(self) -> str:
        return self.elements[-1]

    def comparable(self, a: str, b: str) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def incomparable_pairs(self) -> List[Tuple[str, str]]:
        """Pairs ``(a, b)`` of incomparable elements, ``a`` before ``b`` in the linear extension."""
        return [(a, b) for a, b in itertools.combinations(self.elements, 2) if not self.comparable(a, b)]

    def covers(self) -> List[Tuple[str, str]]:
        return self.order.covers()

    def reverse(self) -> 'DistributiveLattice':
        return DistributiveLattice(self.order.reverse(), bound=max(len(self), DEFAULT_LATTICE_BOUND))

    def join_irreducibles(self) -> Poset:
        """Elements with exactly one lower cover, with the induced order."""
        lower_covers = {a: [low for low, high in self.covers() if high == a] for a in self.elements}
        irreducible = [a for a in self.elements if len(lower_covers[a]) == 1]
        relations = [(a, b) for a, b in itertools.permutations(irreducible, 2) if self.order.less(a, b)]
        return Poset(irreducible, relations)

    def hasse_digraph(self) -> nx.DiGraph:
        return self.order.hasse_digraph()

    def is_isomorphic(self, other: 'DistributiveLattice') -> bool:
        return nx.is_isomorphic(self.hasse_digraph(), other.hasse_digraph())

    def is_down_set(self, subset: Iterable[str]) -> bool:
        return self.order.is_down_set(subset)

    def poset_ideals(self, bound: int = DEFAULT_LATTICE_BOUND) -> List[FrozenSet[str]]:
        """All down-sets of the lattice, including the empty set and the whole lattice."""
        return self.order.ideals(bound)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"DistributiveLattice({list(self.elements)})"


def lattice_from_poset(poset: Poset, poset_bound: int = DEFAULT_POSET_BOUND,
                       lattice_bound: int = DEFAULT_LATTICE_BOUND) -> DistributiveLattice:
    """Birkhoff lattice of ``poset``.

    Raises:
        LatticeError: If the poset or the resulting lattice exceeds its bound
    """
    return DistributiveLattice.from_poset(poset, poset_bound, lattice_bound)


__all__ = ['DEFAULT_LATTICE_BOUND', 'DistributiveLattice', 'lattice_from_poset']
