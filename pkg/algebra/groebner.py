"""Buchberger's algorithm with reduced bases and the colon-by-last-variable shortcut."""

import heapq
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from errors import GroebnerError, GroebnerLimitExceeded, OrderError
from algebra.monomial import Monomial
from algebra.orders import MonomialOrder
from algebra.polynomial import Polynomial, reduce

logger = logging.getLogger('koszul_toolkit.algebra.groebner')


@dataclass
class EngineOptions:
    """Process-wide engine settings, filled from configuration by the command layer."""

    max_pairs: Optional[int] = None
    debug_recompute: bool = False


options = EngineOptions()


def configure(max_pairs: Optional[int] = None, debug_recompute: bool = False) -> EngineOptions:
    options.max_pairs = max_pairs
    options.debug_recompute = debug_recompute
    logger.debug(f"Engine configured: max_pairs={max_pairs}, debug_recompute={debug_recompute}")
    return options


@dataclass(frozen=True)
class GroebnerBasis:
    """Gröbner basis of an ideal for a fixed order.

    When ``reduced`` is set the elements are monic, mutually irreducible and
    sorted by leading monomial from largest to smallest.
    """

    elements: Tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = True

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def max_degree(self) -> int:
        return max((g.total_degree() for g in self.elements), default=-1)

    def is_quadratic(self) -> bool:
        return self.max_degree() <= 2

    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    lcm = mf.lcm(mg)
    return f.mul_term(1 / cf, lcm / mf) - g.mul_term(1 / cg, lcm / mg)


def reduce_basis(elements: Iterable[Polynomial], order: MonomialOrder) -> Tuple[Polynomial, ...]:
    """Turn a Gröbner basis into the reduced one.

    Drops elements whose leading monomial is divisible by another's, reduces
    every remaining element fully against the others and makes it monic.
    """
    candidates = [g.monic(order) for g in elements if not g.is_zero()]
    candidates.sort(key=lambda g: order.key(g.leading_monomial(order)))
    minimal: List[Polynomial] = []
    leads: List[Monomial] = []
    for g in candidates:
        lead = g.leading_monomial(order)
        if any(other.divides(lead) for other in leads):
            continue
        minimal.append(g)
        leads.append(lead)
    reduced = []
    for position, g in enumerate(minimal):
        others = minimal[:position] + minimal[position + 1:]
        reduced.append(reduce(g, others, order, track_quotients=False).remainder.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return tuple(reduced)


def _chain_skip(i: int, j: int, lcm: Monomial, leads: Sequence[Monomial], pending: Set[Tuple[int, int]]) -> bool:
    for k, lead in enumerate(leads):
        if k == i or k == j:
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        if lead.divides(lcm):
            return True
    return False


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder, max_pairs: Optional[int] = None,
               criteria: bool = True) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    S-pairs are processed by increasing lcm (ties by index pair). With
    ``criteria`` the coprime and chain criteria discard useless pairs.

    Raises:
        GroebnerLimitExceeded: If more than ``max_pairs`` S-pairs are reduced
    """
    limit = max_pairs if max_pairs is not None else options.max_pairs
    basis: List[Polynomial] = []
    seen = set()
    for g in gens:
        if g.is_zero():
            continue
        g = g.monic(order)
        if g not in seen:
            seen.add(g)
            basis.append(g)
    if not basis:
        return GroebnerBasis((), order, True)

    leads = [g.leading_monomial(order) for g in basis]
    pending: Set[Tuple[int, int]] = set()
    queue: List[Tuple[object, int, int]] = []

    def add_pair(i: int, j: int) -> None:
        pending.add((i, j))
        heapq.heappush(queue, (order.key(leads[i].lcm(leads[j])), i, j))

    for j in range(len(basis)):
        for i in range(j):
            add_pair(i, j)

    processed = 0
    skipped = 0
    while queue:
        _, i, j = heapq.heappop(queue)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lcm = leads[i].lcm(leads[j])
        if criteria and (leads[i].is_coprime(leads[j]) or _chain_skip(i, j, lcm, leads, pending)):
            skipped += 1
            continue
        processed += 1
        if limit is not None and processed > limit:
            raise GroebnerLimitExceeded(limit)
        remainder = reduce(s_polynomial(basis[i], basis[j], order), basis, order, track_quotients=False).remainder
        if remainder.is_zero():
            continue
        remainder = remainder.monic(order)
        basis.append(remainder)
        leads.append(remainder.leading_monomial(order))
        new = len(basis) - 1
        if leads[new].is_one():
            break
        for k in range(new):
            add_pair(k, new)

    result = reduce_basis(basis, order)
    logger.debug(
        f"Buchberger: {len(result)} elements under {order.kind}, "
        f"{processed} S-pairs reduced, {skipped} skipped"
    )
    return GroebnerBasis(result, order, True)


def is_groebner_basis(elements: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Check that every S-polynomial of ``elements`` reduces to zero."""
    elements = [g for g in elements if not g.is_zero()]
    for j in range(len(elements)):
        for i in range(j):
            s = s_polynomial(elements[i], elements[j], order)
            if not reduce(s, elements, order, track_quotients=False).remainder.is_zero():
                return False
    return True


def colon_by_last_variable(basis: GroebnerBasis, variable: Optional[int] = None) -> GroebnerBasis:
    """Gröbner basis of ``I : x`` where ``x`` is the least variable of a revlex order.

    Elements divisible by ``x`` are divided once, the others are kept. The
    input must be a reduced basis of a homogeneous ideal.

    Args:
        basis: Reduced revlex basis of a homogeneous ideal
        variable: Index of ``x``; defaults to the least variable of the order

    Raises:
        OrderError: If the basis order is not revlex
        GroebnerError: If an element is not homogeneous or ``variable`` is not the least variable
    """
    order = basis.order
    if order.kind != 'revlex':
        raise OrderError(f"Colon by the last variable needs a revlex order, got {order.kind}")
    last = order.least_variable()
    if variable is not None and variable != last:
        raise GroebnerError(f"Variable {variable} is not the least variable {last} of {order}")
    for g in basis.elements:
        if not g.is_homogeneous():
            raise GroebnerError(f"Colon by the last variable needs a homogeneous ideal; {g} is not homogeneous")
    x = Monomial.variable(last)
    images = []
    for g in basis.elements:
        if all(m.exponent(last) for m in g.monomials()):
            images.append(Polynomial(g.ring, {m / x: c for m, c in g.items()}))
        else:
            images.append(g)
    return GroebnerBasis(reduce_basis(images, order), order, True)


__all__ = [
    'EngineOptions',
    'configure',
    'options',
    'GroebnerBasis',
    's_polynomial',
    'reduce_basis',
    'buchberger',
    'is_groebner_basis',
    'colon_by_last_variable',
]
