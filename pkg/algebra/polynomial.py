"""Exact-coefficient multivariate polynomials and the multivariate division algorithm."""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from errors import PolynomialError
from algebra.monomial import VARIABLE_NAME, Monomial, Variable
from algebra.orders import MonomialOrder

Scalar = Union[int, Fraction]


class PolynomialRing:
    """Polynomial ring over the rationals in an ordered list of named variables."""

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        for name in names:
            if not VARIABLE_NAME.fullmatch(name):
                raise PolynomialError(f"Invalid variable name '{name}'")
        if len(set(names)) != len(names):
            raise PolynomialError(f"Variable names must be unique: {list(names)}")
        self.names: Tuple[str, ...] = names
        self.variables: Tuple[Variable, ...] = tuple(Variable(i, n) for i, n in enumerate(names))
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def dimension(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PolynomialError(f"Unknown variable '{name}' in ring {list(self.names)}")

    def has_variable(self, name: str) -> bool:
        return name in self._index

    def var(self, name: str) -> 'Polynomial':
        return Polynomial(self, {Monomial.variable(self.index(name)): 1})

    def gens(self) -> Tuple['Polynomial', ...]:
        return tuple(Polynomial(self, {Monomial.variable(i): 1}) for i in range(self.dimension))

    def zero(self) -> 'Polynomial':
        return Polynomial(self)

    def one(self) -> 'Polynomial':
        return self.constant(1)

    def constant(self, value: Scalar) -> 'Polynomial':
        return Polynomial(self, {Monomial.one(): value})

    def monomial(self, monomial: Monomial, coefficient: Scalar = 1) -> 'Polynomial':
        return Polynomial(self, {monomial: coefficient})

    def extend(self, names: Iterable[str]) -> 'PolynomialRing':
        """Ring with extra trailing variables; existing indices are unchanged."""
        return PolynomialRing(self.names + tuple(names))

    def subring(self, names: Iterable[str]) -> 'PolynomialRing':
        """Ring on the given variables, kept in this ring's order."""
        wanted = set(names)
        for name in wanted:
            self.index(name)
        return PolynomialRing([name for name in self.names if name in wanted])

    def fresh_name(self, stem: str = 't') -> str:
        candidate, k = stem, 0
        while candidate in self._index:
            k += 1
            candidate = f"{stem}{k}"
        return candidate

    def default_order(self) -> MonomialOrder:
        """Revlex induced by the ring's own variable order."""
        return MonomialOrder.revlex(self, self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolynomialRing) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"PolynomialRing({', '.join(self.names)})"


class Polynomial:
    """Immutable polynomial: a map from monomials to nonzero rational coefficients."""

    __slots__ = ('ring', '_terms', '_hash')

    def __init__(self, ring: PolynomialRing, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.ring = ring
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            if monomial.max_index >= ring.dimension:
                raise PolynomialError(f"{monomial!r} uses a variable outside {ring!r}")
            value = Fraction(coefficient)
            if value:
                cleaned[monomial] = value
        self._terms = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, ring: PolynomialRing, terms: Dict[Monomial, Fraction]) -> 'Polynomial':
        """Wrap an already-clean term dict without copying or validation."""
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = terms
        poly._hash = None
        return poly

    # -- inspection -------------------------------------------------------

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def monomials(self) -> List[Monomial]:
        return list(self._terms)

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(monomial, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        """Largest degree of a term; -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self._terms}) <= 1

    def is_linear_form(self) -> bool:
        return bool(self._terms) and all(m.degree == 1 for m in self._terms)

    def is_constant(self) -> bool:
        return all(m.is_one() for m in self._terms)

    def variables_used(self) -> Tuple[int, ...]:
        return tuple(sorted({i for m in self._terms for i in m.support()}))

    def linear_coefficients(self) -> Tuple[Fraction, ...]:
        """Coefficient vector of a linear form over the ring's variables."""
        if not all(m.degree == 1 for m in self._terms):
            raise PolynomialError(f"{self} is not a linear form")
        vector = [Fraction(0)] * self.ring.dimension
        for monomial, coefficient in self._terms.items():
            vector[monomial.max_index] = coefficient
        return tuple(vector)

    def sorted_terms(self, order: MonomialOrder) -> List[Tuple[Fraction, Monomial]]:
        """Terms from largest to smallest monomial under ``order``."""
        return [(self._terms[m], m) for m in sorted(self._terms, key=order.key, reverse=True)]

    def leading_term(self, order: MonomialOrder) -> Tuple[Fraction, Monomial]:
        if not self._terms:
            raise PolynomialError("The zero polynomial has no leading term")
        monomial = max(self._terms, key=order.key)
        return self._terms[monomial], monomial

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return self.leading_term(order)[1]

    def monic(self, order: MonomialOrder) -> 'Polynomial':
        if not self._terms:
            return self
        coefficient, _ = self.leading_term(order)
        return self.scale(1 / coefficient)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise PolynomialError(f"Ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.constant(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            value = terms.get(monomial, 0) + coefficient
            if value:
                terms[monomial] = value
            else:
                terms.pop(monomial, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = m1 * m2
                value = terms.get(monomial, 0) + c1 * c2
                if value:
                    terms[monomial] = value
                else:
                    terms.pop(monomial, None)
        return Polynomial._raw(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Polynomial':
        if not isinstance(exponent, int) or exponent < 0:
            raise PolynomialError(f"Exponent must be a non-negative integer, got {exponent!r}")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Scalar) -> 'Polynomial':
        factor = Fraction(factor)
        if not factor:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: c * factor for m, c in self._terms.items()})

    def mul_term(self, coefficient: Scalar, monomial: Monomial) -> 'Polynomial':
        coefficient = Fraction(coefficient)
        if not coefficient:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m * monomial: c * coefficient for m, c in self._terms.items()})

    def substitute(self, mapping: Mapping[int, 'Polynomial'], target: Optional[PolynomialRing] = None) -> 'Polynomial':
        """Replace variables by polynomials; unmapped variables are kept by name in ``target``."""
        target = target or self.ring
        result = target.zero()
        for monomial, coefficient in self._terms.items():
            term = target.constant(coefficient)
            for index, exp in monomial.items():
                image = mapping.get(index)
                if image is None:
                    image = target.var(self.ring.names[index])
                term = term * (image ** exp)
            result = result + term
        return result

    def map_to_ring(self, ring: PolynomialRing) -> 'Polynomial':
        """Same polynomial, re-indexed by variable name into ``ring``."""
        if ring == self.ring:
            return Polynomial._raw(ring, self._terms)
        positions = {i: ring.index(name) for i, name in enumerate(self.ring.names)
                     if any(i in m.support() for m in self._terms)}
        terms = {Monomial((positions[i], e) for i, e in m.items()): c for m, c in self._terms.items()}
        return Polynomial._raw(ring, terms)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            value = Fraction(other)
            if not value:
                return not self._terms
            return self._terms == {Monomial.one(): value}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        from algebra.poly_parser import format_polynomial
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


@dataclass(frozen=True)
class DivisionResult:
    """Outcome of dividing ``f`` by a list of divisors.

    ``f == sum(q * d for q, d in zip(quotients, divisors)) + remainder`` holds exactly.
    """

    remainder: Polynomial
    quotients: Tuple[Polynomial, ...]
    reduced: bool


def leading_term(f: Polynomial, order: MonomialOrder) -> Tuple[Fraction, Monomial]:
    """Largest monomial of ``f`` under ``order`` with its coefficient.

    Raises:
        PolynomialError: If ``f`` is zero
    """
    return f.leading_term(order)


def reduce(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder,
           track_quotients: bool = True) -> DivisionResult:
    """Multivariate division of ``f`` by ``divisors``.

    The largest remaining monomial is handled first and divisors are scanned in
    list order, so the result is deterministic. No monomial of the remainder is
    divisible by a divisor's leading monomial.

    Raises:
        PolynomialError: If a divisor is zero
    """
    leads = []
    for divisor in divisors:
        if divisor.is_zero():
            raise PolynomialError("Cannot divide by the zero polynomial")
        leads.append(divisor.leading_term(order))
    ring = f.ring
    key = order.key
    pending = dict(f._terms)
    remainder: Dict[Monomial, Fraction] = {}
    quotients: List[Dict[Monomial, Fraction]] = [{} for _ in divisors]
    steps = 0
    while pending:
        monomial = max(pending, key=key)
        coefficient = pending[monomial]
        for position, (lead_coefficient, lead_monomial) in enumerate(leads):
            if lead_monomial.divides(monomial):
                shift = monomial / lead_monomial
                factor = coefficient / lead_coefficient
                if track_quotients:
                    quotient = quotients[position]
                    value = quotient.get(shift, 0) + factor
                    if value:
                        quotient[shift] = value
                    else:
                        quotient.pop(shift, None)
                for term_monomial, term_coefficient in divisors[position]._terms.items():
                    target = term_monomial * shift
                    value = pending.get(target, 0) - factor * term_coefficient
                    if value:
                        pending[target] = value
                    else:
                        pending.pop(target, None)
                steps += 1
                break
        else:
            remainder[monomial] = coefficient
            del pending[monomial]
    return DivisionResult(
        remainder=Polynomial._raw(ring, remainder),
        quotients=tuple(Polynomial._raw(ring, q) for q in quotients),
        reduced=steps > 0,
    )


def divide_exact(f: Polynomial, g: Polynomial, order: Optional[MonomialOrder] = None) -> Polynomial:
    """Quotient ``f / g``.

    Raises:
        PolynomialError: If ``g`` does not divide ``f``
    """
    result = reduce(f, [g], order or f.ring.default_order())
    if not result.remainder.is_zero():
        raise PolynomialError(f"{g} does not divide {f}")
    return result.quotients[0]


__all__ = [
    'PolynomialRing',
    'Polynomial',
    'DivisionResult',
    'leading_term',
    'reduce',
    'divide_exact',
]
