"""Join-meet ideals of distributive lattices and the poset-ideal Koszul filtrations of their rings."""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from errors import LatticeError
from algebra.ideals import IdealHandle, colon_by_variable, colon_general, ideal_equal
from algebra.orders import MonomialOrder
from algebra.polynomial import PolynomialRing
from koszul.filtration import Filtration
from koszul.linear_ideal import LinearIdeal, QuotientRing
from lattices.lattice import DEFAULT_LATTICE_BOUND, DistributiveLattice

logger = logging.getLogger('koszul_toolkit.lattices')

PosetIdeal = FrozenSet[str]


def hibi_ring(L: DistributiveLattice) -> PolynomialRing:
    """One variable per lattice element, in the lattice's bottom-first linear extension."""
    return PolynomialRing(L.elements)


def join_meet_ideal(L: DistributiveLattice, ring: Optional[PolynomialRing] = None) -> IdealHandle:
    """``I_L``: one binomial ``ab - (a meet b)(a join b)`` per incomparable pair."""
    ring = ring or hibi_ring(L)
    gens = []
    for a, b in L.incomparable_pairs():
        gens.append(ring.var(a) * ring.var(b) - ring.var(L.meet(a, b)) * ring.var(L.join(a, b)))
    return IdealHandle(ring, gens)


def hibi_order(L: DistributiveLattice, ideal: Optional[Iterable[str]] = None,
               ring: Optional[PolynomialRing] = None) -> MonomialOrder:
    """Revlex order in which larger lattice elements are smaller variables.

    With ``ideal``, its elements are additionally placed above all other variables.
    """
    ring = ring or hibi_ring(L)
    priority = list(L.elements)
    if ideal is not None:
        inside = set(ideal)
        priority = [a for a in priority if a in inside] + [a for a in priority if a not in inside]
    return MonomialOrder.revlex(ring, priority)


def poset_ideals(L: DistributiveLattice, bound: int = DEFAULT_LATTICE_BOUND) -> List[PosetIdeal]:
    return L.poset_ideals(bound)


def _require_element(L: DistributiveLattice, a: str) -> None:
    if a not in L.elements:
        raise LatticeError(f"Unknown lattice element '{a}'")


def cogenerated_ideal(L: DistributiveLattice, a: str) -> PosetIdeal:
    """``{b : not b >= a}``, the poset ideal co-generated by ``a``."""
    _require_element(L, a)
    return frozenset(b for b in L.elements if not L.leq(a, b))


def cogenerated_ideal_literal(L: DistributiveLattice, a: str) -> PosetIdeal:
    """``{b : not b > a}``, which also contains ``a``; kept to show it gives the wrong colon."""
    _require_element(L, a)
    return frozenset(b for b in L.elements if not (L.leq(a, b) and a != b))


class HibiRing:
    """``A(L) = K[L] / I_L`` with the Hibi order, shared by every filtration of ``L``."""

    def __init__(self, L: DistributiveLattice):
        self.lattice = L
        self.ring = hibi_ring(L)
        self.ideal = join_meet_ideal(L, self.ring)
        self.order = hibi_order(L, ring=self.ring)
        self.host = QuotientRing(self.ring, self.ideal, self.order)

    def classes(self, subset: Iterable[str]) -> LinearIdeal:
        """Ideal of ``A(L)`` generated by the variables of ``subset``."""
        return LinearIdeal(self.host, [self.ring.var(a) for a in self.lattice.elements if a in set(subset)])


@dataclass
class CoverColon:
    lower: PosetIdeal
    upper: PosetIdeal
    element: str
    cogenerated: PosetIdeal
    holds: bool


def _check_poset_ideal(L: DistributiveLattice, subset: Iterable[str]) -> PosetIdeal:
    subset = frozenset(subset)
    unknown = subset - set(L.elements)
    if unknown:
        raise LatticeError(f"Unknown lattice elements {sorted(unknown)}")
    if not L.is_down_set(subset):
        raise LatticeError(f"{sorted(subset)} is not a poset ideal")
    return subset


def colon_cover(hibi: HibiRing, I: Iterable[str], J: Iterable[str], cogenerate=cogenerated_ideal,
                use_elimination: bool = False) -> CoverColon:
    """Certify ``(I : J) = H`` in ``A(L)`` for poset ideals with ``J = I + {a}``, ``H`` co-generated by ``a``.

    Raises:
        LatticeError: If the inputs are not poset ideals differing in exactly one element
    """
    L = hibi.lattice
    I = _check_poset_ideal(L, I)
    J = _check_poset_ideal(L, J)
    if not I < J or len(J - I) != 1:
        raise LatticeError(f"{sorted(J)} does not cover {sorted(I)}")
    (a,) = tuple(J - I)
    H = cogenerate(L, a)
    base = hibi.classes(I).ideal
    if use_elimination:
        lhs = colon_general(base, hibi.ring.var(a))
    else:
        lhs = colon_by_variable(base, hibi.ring.index(a))
    holds = ideal_equal(lhs, hibi.classes(H).ideal, hibi.order)
    return CoverColon(I, J, a, H, holds)


def covering_pairs(ideals: Sequence[PosetIdeal]) -> List[Tuple[PosetIdeal, PosetIdeal]]:
    present = set(ideals)
    return [(ideal - {a}, ideal) for ideal in ideals for a in sorted(ideal) if ideal - {a} in present]


def certify_covers(hibi: HibiRing, workers: int = 1, use_elimination: bool = False) -> List[CoverColon]:
    """Run :func:`colon_cover` on every covering pair of poset ideals."""
    pairs = covering_pairs(poset_ideals(hibi.lattice))
    results: List[Optional[CoverColon]] = [None] * len(pairs)
    if workers > 1 and len(pairs) > 4:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(colon_cover, hibi, I, J, use_elimination=use_elimination): position
                       for position, (I, J) in enumerate(pairs)}
            for future in as_completed(futures):
                results[futures[future]] = future.result()
    else:
        results = [colon_cover(hibi, I, J, use_elimination=use_elimination) for I, J in pairs]
    failed = [r for r in results if not r.holds]
    if failed:
        logger.error(f"{len(failed)} of {len(results)} cover colons fail")
    return results


def _ideal_filtration(hibi: HibiRing, family: Sequence[PosetIdeal], name: str, drop_last: bool) -> Filtration:
    F = Filtration(hibi.host, name=name)
    position = {a: k for k, a in enumerate(hibi.lattice.elements)}
    for ideal in family:
        F.add(hibi.classes(ideal))
    present = set(family)
    for ideal in family:
        if not ideal:
            continue
        ranked = sorted(ideal, key=position.get, reverse=drop_last)
        for a in ranked:
            smaller = ideal - {a}
            if smaller in present:
                F.add_hint(hibi.classes(ideal), hibi.classes(smaller))
                break
    return F


def hibi_koszul_filtration(L: DistributiveLattice, hibi: Optional[HibiRing] = None) -> Filtration:
    """Ideals of ``A(L)`` generated by the poset ideals of ``L``."""
    hibi = hibi or HibiRing(L)
    return _ideal_filtration(hibi, poset_ideals(L), "poset ideals", drop_last=True)


def upset_filtration(L: DistributiveLattice, hibi: Optional[HibiRing] = None) -> Filtration:
    """Ideals of ``A(L)`` generated by the up-sets of ``L``."""
    hibi = hibi or HibiRing(L)
    upsets = poset_ideals(L.reverse())
    return _ideal_filtration(hibi, upsets, "up-sets", drop_last=False)


def reduced_family_check(L: DistributiveLattice, family: Iterable[Iterable[str]]) -> bool:
    """Whether ``family`` holds every co-generated ideal and ``L``, and each nonempty member drops to another by one element.

    Raises:
        LatticeError: If a member is not a poset ideal
    """
    members = {_check_poset_ideal(L, ideal) for ideal in family}
    required = {cogenerated_ideal(L, a) for a in L.elements} | {frozenset(L.elements)}
    missing = required - members
    if missing:
        logger.info(f"Family misses {len(missing)} required ideals")
        return False
    for ideal in members:
        if ideal and not any(ideal - {a} in members for a in ideal):
            logger.info(f"{sorted(ideal)} has no member one element smaller")
            return False
    return True


def reduced_family_filtration(L: DistributiveLattice, family: Iterable[Iterable[str]],
                              hibi: Optional[HibiRing] = None) -> Filtration:
    hibi = hibi or HibiRing(L)
    members = sorted({_check_poset_ideal(L, ideal) for ideal in family}, key=lambda i: (len(i), sorted(i)))
    return _ideal_filtration(hibi, members, "reduced family", drop_last=True)


__all__ = [
    'PosetIdeal',
    'hibi_ring',
    'join_meet_ideal',
    'hibi_order',
    'poset_ideals',
    'cogenerated_ideal',
    'cogenerated_ideal_literal',
    'HibiRing',
    'CoverColon',
    'colon_cover',
    'covering_pairs',
    'certify_covers',
    'hibi_koszul_filtration',
    'upset_filtration',
    'reduced_family_check',
    'reduced_family_filtration',
]
