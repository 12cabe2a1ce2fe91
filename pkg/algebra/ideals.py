"""Ideals with cached reduced Gröbner bases, and the ideal operations built on them."""

import itertools
import logging
import threading
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from errors import GroebnerError, PolynomialError
from algebra import groebner as engine
from algebra.groebner import GroebnerBasis, buchberger, colon_by_last_variable
from algebra.linear_algebra import nullspace
from algebra.monomial import Monomial
from algebra.orders import MonomialOrder
from algebra.polynomial import Polynomial, PolynomialRing, divide_exact, reduce

logger = logging.getLogger('koszul_toolkit.algebra')


class IdealHandle:
    """Ideal of a polynomial ring given by generators.

    Reduced Gröbner bases are computed lazily, at most once per order, and
    shared by every membership, equality and colon query.
    """

    def __init__(self, ring: PolynomialRing, generators: Iterable[Polynomial] = ()):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                g = g.map_to_ring(ring)
            if not g.is_zero():
                gens.append(g)
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self._cache: Dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    def groebner(self, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
        order = order or self.ring.default_order()
        with self._lock:
            cached = self._cache.get(order)
        if cached is not None:
            if engine.options.debug_recompute:
                fresh = buchberger(self.generators, order)
                if fresh.elements != cached.elements:
                    raise GroebnerError(f"Cached basis differs from a recomputation under {order}")
            return cached
        basis = buchberger(self.generators, order)
        with self._lock:
            return self._cache.setdefault(order, basis)

    def seed(self, basis: GroebnerBasis) -> None:
        with self._lock:
            self._cache.setdefault(basis.order, basis)

    def plus(self, polys: Iterable[Polynomial]) -> 'IdealHandle':
        return IdealHandle(self.ring, self.generators + tuple(polys))

    def contains(self, f: Polynomial, order: Optional[MonomialOrder] = None) -> bool:
        return normal_form(f, self, order).is_zero()

    def contains_ideal(self, other: 'IdealHandle', order: Optional[MonomialOrder] = None) -> bool:
        return all(self.contains(g, order) for g in other.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def key(self, order: Optional[MonomialOrder] = None) -> Tuple[Polynomial, ...]:
        """Canonical presentation-independent key: the reduced basis."""
        return self.groebner(order).elements

    def __repr__(self) -> str:
        return f"IdealHandle({', '.join(str(g) for g in self.generators) or '0'})"


def _same_ring(I: IdealHandle, f: Polynomial) -> Polynomial:
    if f.ring != I.ring:
        raise PolynomialError(f"{f} does not live in {I.ring!r}")
    return f


def normal_form(f: Polynomial, I: IdealHandle, order: Optional[MonomialOrder] = None) -> Polynomial:
    """Remainder of ``f`` against the reduced basis; zero iff ``f`` lies in ``I``."""
    basis = I.groebner(order)
    return reduce(_same_ring(I, f), basis.elements, basis.order, track_quotients=False).remainder


def ideal_equal(I: IdealHandle, J: IdealHandle, order: Optional[MonomialOrder] = None) -> bool:
    if I.ring != J.ring:
        raise PolynomialError(f"Ring mismatch: {I.ring!r} vs {J.ring!r}")
    order = order or I.ring.default_order()
    return I.groebner(order).elements == J.groebner(order).elements


def initial_ideal(I: IdealHandle, order: Optional[MonomialOrder] = None) -> IdealHandle:
    """Monomial ideal generated by the leading monomials of the reduced basis."""
    basis = I.groebner(order)
    return IdealHandle(I.ring, [I.ring.monomial(m) for m in basis.leading_monomials()])


def is_quadratic_gb(I: IdealHandle, order: Optional[MonomialOrder] = None) -> bool:
    return I.groebner(order).is_quadratic()


def _revlex_with_last(ring: PolynomialRing, index: int) -> MonomialOrder:
    names = [name for i, name in enumerate(ring.names) if i != index] + [ring.names[index]]
    return MonomialOrder.revlex(ring, names)


def colon_by_variable(I: IdealHandle, index: int) -> IdealHandle:
    """``I : x`` through the revlex order that makes ``x`` the least variable.

    Non-homogeneous ideals fall back to :func:`colon_general`.
    """
    if not I.is_homogeneous():
        return colon_general(I, I.ring.gens()[index])
    order = _revlex_with_last(I.ring, index)
    result = colon_by_last_variable(I.groebner(order), index)
    handle = IdealHandle(I.ring, result.elements)
    handle.seed(result)
    return handle


def colon_by_linear_form(I: IdealHandle, form: Polynomial) -> IdealHandle:
    """``I : l`` for a nonzero linear form ``l``.

    A linear coordinate change sends ``l`` to one of its variables; the colon
    by that variable is taken and mapped back.
    """
    coefficients = form.linear_coefficients()
    support = [k for k, c in enumerate(coefficients) if c]
    if not support:
        raise PolynomialError("Colon by the zero form")
    k = support[-1]
    if len(support) == 1:
        return colon_by_variable(I, k)
    ring = I.ring
    gens = ring.gens()
    a_k = coefficients[k]
    rest = ring.zero()
    for i in support[:-1]:
        rest = rest + gens[i].scale(coefficients[i])
    forward = {k: (gens[k] - rest).scale(1 / a_k)}
    backward = {k: form}
    moved = IdealHandle(ring, [g.substitute(forward) for g in I.generators])
    colon = colon_by_variable(moved, k)
    return IdealHandle(ring, [g.substitute(backward) for g in colon.generators])


def eliminate(I: IdealHandle, block: Iterable[str]) -> IdealHandle:
    """``I`` intersected with the subring of the variables outside ``block``."""
    block = list(block)
    if not block:
        return I
    ring = I.ring
    order = MonomialOrder.elimination(ring, block)
    blocked = {ring.index(name) for name in block}
    basis = I.groebner(order)
    remaining = PolynomialRing([name for name in ring.names if name not in set(block)])
    kept = [g.map_to_ring(remaining) for g in basis.elements if not set(g.variables_used()) & blocked]
    logger.debug(f"Eliminated {block}: {len(kept)} of {len(basis)} basis elements survive")
    return IdealHandle(remaining, kept)


def intersect(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1 - t)*J``."""
    if I.ring != J.ring:
        raise PolynomialError(f"Ring mismatch: {I.ring!r} vs {J.ring!r}")
    ring = I.ring
    t_name = ring.fresh_name('t')
    big = ring.extend([t_name])
    t = big.var(t_name)
    gens = [t * g.map_to_ring(big) for g in I.generators]
    gens += [(1 - t) * g.map_to_ring(big) for g in J.generators]
    result = eliminate(IdealHandle(big, gens), [t_name])
    return IdealHandle(ring, [g.map_to_ring(ring) for g in result.generators])


def colon_general(I: IdealHandle, f: Polynomial) -> IdealHandle:
    """``I : f`` computed as ``(1/f) * (I ∩ (f))``.

    Raises:
        PolynomialError: If ``f`` is zero
    """
    _same_ring(I, f)
    if f.is_zero():
        raise PolynomialError("Colon by the zero polynomial")
    if f.is_constant():
        return IdealHandle(I.ring, I.generators)
    meet = intersect(I, IdealHandle(I.ring, [f]))
    return IdealHandle(I.ring, [divide_exact(g, f) for g in meet.generators])


def colon_by_ideal(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """``I : J`` as the intersection of the colons by the generators of ``J``."""
    if J.is_zero():
        return IdealHandle(I.ring, [I.ring.one()])
    result = None
    for g in J.generators:
        colon = colon_general(I, g)
        result = colon if result is None else intersect(result, colon)
    return result


def kernel_of_monomial_map(images: Sequence[Monomial], target: PolynomialRing,
                           source_names: Optional[Sequence[str]] = None) -> IdealHandle:
    """Toric ideal of the map sending the k-th source variable to ``images[k]``.

    Computed by eliminating the target variables from ``(x_k - images[k])``.
    """
    if not images:
        raise PolynomialError("A monomial map needs at least one image")
    names = list(source_names or [f"x{k + 1}" for k in range(len(images))])
    clash = set(names) & set(target.names)
    if clash:
        raise PolynomialError(f"Source and target variables overlap: {sorted(clash)}")
    big = target.extend(names)
    gens = [big.var(name) - big.monomial(image) for name, image in zip(names, images)]
    return eliminate(IdealHandle(big, gens), target.names)


def squarefree_veronese_images(m: int, d: int) -> Tuple[PolynomialRing, List[Monomial]]:
    """Squarefree monomials of degree ``d`` in ``t1..tm``, lexicographically decreasing."""
    target = PolynomialRing([f"t{i + 1}" for i in range(m)])
    images = [Monomial({i: 1 for i in combo}) for combo in itertools.combinations(range(m), d)]
    return target, images


def degree_one_part(I: IdealHandle, order: Optional[MonomialOrder] = None) -> List[Polynomial]:
    """Basis, in reduced echelon form, of the linear forms contained in ``I``.

    Solves ``normal_form(sum a_k x_k) = 0`` for the coefficients ``a_k``.
    """
    ring = I.ring
    normal_forms = [normal_form(x, I, order) for x in ring.gens()]
    monomials = sorted({m for nf in normal_forms for m in nf.monomials()}, key=lambda m: m.dense(ring.dimension))
    rows = [tuple(nf.coefficient(m) for nf in normal_forms) for m in monomials]
    basis = nullspace(rows, ring.dimension)
    gens = ring.gens()
    forms = []
    for vector in basis:
        form = ring.zero()
        for k, value in enumerate(vector):
            if value:
                form = form + gens[k].scale(value)
        forms.append(form)
    return forms


def linear_generation_defect(base: IdealHandle, C: IdealHandle,
                             order: Optional[MonomialOrder] = None) -> Optional[int]:
    """Smallest degree of a generator of ``C`` missing from ``base + (C_1)``, None when there is none.

    Raises:
        GroebnerError: If ``base`` is not contained in ``C``
    """
    if not C.contains_ideal(base, order):
        raise GroebnerError("Base ideal is not contained in the ideal being tested")
    linear = base.plus(degree_one_part(C, order))
    missing = [g.total_degree() for g in C.groebner(order).elements if not linear.contains(g, order)]
    return min(missing) if missing else None


def is_linearly_generated_mod(base: IdealHandle, C: IdealHandle, order: Optional[MonomialOrder] = None) -> bool:
    """True iff ``C`` equals ``base`` plus the linear forms it contains."""
    return linear_generation_defect(base, C, order) is None


def colon_formula_quadratic(I: IdealHandle, position: int, order: MonomialOrder) -> IdealHandle:
    """Variable-set colon formula for an ideal with a quadratic revlex basis.

    With ``order`` listing ``x_1 > ... > x_n``, returns
    ``(I, x_{i+1}..x_n, {x_j : j <= i, x_j x_i in ini(I)})`` for ``i = position`` (1-based).
    """
    ring = I.ring
    priority = order.priority
    x_i = priority[position - 1]
    later = [ring.gens()[k] for k in priority[position:]]
    leads = set(I.groebner(order).leading_monomials())
    extra = [ring.gens()[x_j] for x_j in priority[:position]
             if Monomial.variable(x_j) * Monomial.variable(x_i) in leads]
    return I.plus(later + extra)


def linear_quotient_steps(I: IdealHandle, sequence: Sequence[int]) -> List[Tuple[int, bool]]:
    """For each variable of ``sequence`` whether ``(I, earlier ones) : x`` is linearly generated mod ``I``."""
    steps = []
    gens = I.ring.gens()
    for position, index in enumerate(sequence):
        prefix = I.plus(gens[k] for k in sequence[:position])
        colon = colon_by_variable(prefix, index)
        steps.append((index, is_linearly_generated_mod(I, colon)))
    return steps


def has_linear_quotients(I: IdealHandle, sequence: Sequence[int]) -> bool:
    return all(linear for _, linear in linear_quotient_steps(I, sequence))


__all__ = [
    'IdealHandle',
    'normal_form',
    'ideal_equal',
    'initial_ideal',
    'is_quadratic_gb',
    'colon_by_variable',
    'colon_by_linear_form',
    'eliminate',
    'intersect',
    'colon_general',
    'colon_by_ideal',
    'kernel_of_monomial_map',
    'squarefree_veronese_images',
    'degree_one_part',
    'linear_generation_defect',
    'is_linearly_generated_mod',
    'colon_formula_quadratic',
    'linear_quotient_steps',
    'has_linear_quotients',
]
