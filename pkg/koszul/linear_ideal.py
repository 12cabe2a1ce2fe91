"""Standard graded quotient rings and their ideals generated by linear forms."""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from errors import KoszulError
from algebra.ideals import IdealHandle, colon_by_linear_form, degree_one_part, linear_generation_defect
from algebra.linear_algebra import rank
from algebra.orders import MonomialOrder
from algebra.polynomial import Polynomial, PolynomialRing

logger = logging.getLogger('koszul_toolkit.koszul')


class QuotientRing:
    """``R = S / I_def`` for a homogeneous defining ideal, with a working monomial order."""

    def __init__(self, ring: PolynomialRing, ideal: Optional[IdealHandle] = None,
                 order: Optional[MonomialOrder] = None):
        self.ring = ring
        self.ideal = ideal if ideal is not None else IdealHandle(ring)
        if self.ideal.ring != ring:
            raise KoszulError("Defining ideal lives in a different ring")
        if not self.ideal.is_homogeneous():
            raise KoszulError("Defining ideal must be homogeneous")
        self.order = order or ring.default_order()
        self._linear_part: Optional[List[Polynomial]] = None

    @property
    def linear_part(self) -> List[Polynomial]:
        """Linear forms of the defining ideal itself (empty in standard presentations)."""
        if self._linear_part is None:
            self._linear_part = degree_one_part(self.ideal, self.order)
        return self._linear_part

    def linear_ideal(self, forms: Iterable[Polynomial]) -> 'LinearIdeal':
        return LinearIdeal(self, forms)

    def zero_ideal(self) -> 'LinearIdeal':
        return LinearIdeal(self, ())

    def maximal_ideal(self) -> 'LinearIdeal':
        return LinearIdeal(self, self.ring.gens())

    def variables(self, names: Iterable[str]) -> 'LinearIdeal':
        return LinearIdeal(self, [self.ring.var(name) for name in names])

    def key(self) -> Tuple[Polynomial, ...]:
        return self.ideal.key(self.order)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (isinstance(other, QuotientRing) and self.ring == other.ring
                and self.order == other.order and self.key() == other.key())

    def __hash__(self) -> int:
        return hash(self.ring)

    def __repr__(self) -> str:
        return f"QuotientRing({self.ring!r} / {self.ideal!r})"


class LinearIdeal:
    """Ideal of a quotient ring presented by linear forms of the ambient ring."""

    def __init__(self, host: QuotientRing, forms: Iterable[Polynomial] = ()):
        self.host = host
        gens = []
        for form in forms:
            if form.ring != host.ring:
                form = form.map_to_ring(host.ring)
            if form.is_zero():
                continue
            if not form.is_linear_form():
                raise KoszulError(f"{form} is not a linear form")
            gens.append(form)
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self.ideal = host.ideal.plus(gens)
        self._key: Optional[Tuple[Polynomial, ...]] = None
        self._dimension: Optional[int] = None

    @property
    def key(self) -> Tuple[Polynomial, ...]:
        """Reduced basis of ``I_def + generators`` under the host order."""
        if self._key is None:
            self._key = self.ideal.key(self.host.order)
        return self._key

    @property
    def key_text(self) -> str:
        return '; '.join(str(g) for g in self.key)

    @property
    def dimension(self) -> int:
        """Dimension of the degree-one component modulo the defining ideal."""
        if self._dimension is None:
            base = [form.linear_coefficients() for form in self.host.linear_part]
            spanning = base + [form.linear_coefficients() for form in self.generators]
            width = self.host.ring.dimension
            self._dimension = rank(spanning, width) - rank(base, width)
        return self._dimension

    def is_zero(self) -> bool:
        return self.dimension == 0

    def labels(self) -> List[str]:
        return [str(g) for g in self.generators] or ['0']

    def __str__(self) -> str:
        return f"({', '.join(self.labels())})"

    def __repr__(self) -> str:
        return f"LinearIdeal{self}"


@dataclass(frozen=True)
class CyclicStep:
    """How ``I`` sits over ``J``: ``equal``, ``cyclic`` with spanning ``form``, or ``not_cyclic``."""

    status: str
    form: Optional[Polynomial] = None

    @property
    def is_cyclic(self) -> bool:
        return self.status == 'cyclic'


@dataclass
class ColonResult:
    """``J : I`` in the ambient ring, with its linear presentation when it has one."""

    ideal: IdealHandle
    form: Polynomial
    defect_degree: Optional[int]
    linear: Optional[LinearIdeal] = None

    @property
    def is_linear(self) -> bool:
        return self.defect_degree is None


def _check_host(I: LinearIdeal, J: LinearIdeal) -> None:
    if I.host is not J.host and I.host != J.host:
        raise KoszulError("Linear ideals belong to different quotient rings")


def linear_ideal(host: QuotientRing, forms: Iterable[Polynomial]) -> LinearIdeal:
    """Build a linear ideal of ``host``.

    Raises:
        KoszulError: If a form is not of degree one
    """
    return LinearIdeal(host, forms)


def contains(I: LinearIdeal, J: LinearIdeal) -> bool:
    """True iff ``J`` is contained in ``I``."""
    _check_host(I, J)
    return all(I.ideal.contains(g, I.host.order) for g in J.generators)


def cyclic_over(I: LinearIdeal, J: LinearIdeal) -> CyclicStep:
    """Decide whether ``I / J`` is cyclic by comparing degree-one dimensions.

    The spanning form is the first generator of ``I`` outside ``J``.

    Raises:
        KoszulError: If ``J`` is not contained in ``I``
    """
    if not contains(I, J):
        raise KoszulError(f"{J} is not contained in {I}")
    difference = I.dimension - J.dimension
    if difference == 0:
        return CyclicStep('equal')
    if difference > 1:
        return CyclicStep('not_cyclic')
    for g in I.generators:
        if not J.ideal.contains(g, J.host.order):
            return CyclicStep('cyclic', g)
    raise KoszulError(f"No generator of {I} lies outside {J}")


def colon(J: LinearIdeal, I: LinearIdeal, step: Optional[CyclicStep] = None) -> ColonResult:
    """``J : I`` computed as ``(I_def + J) : l`` for the cyclic witness ``l``.

    Raises:
        KoszulError: If ``I`` is not ``J`` plus one linear form
    """
    _check_host(I, J)
    step = step or cyclic_over(I, J)
    if not step.is_cyclic:
        raise KoszulError(f"{I} is not a cyclic extension of {J} ({step.status})")
    host = J.host
    result = colon_by_linear_form(J.ideal, step.form)
    defect = linear_generation_defect(host.ideal, result, host.order)
    linear = None
    if defect is None:
        linear = LinearIdeal(host, degree_one_part(result, host.order))
        linear._key = result.key(host.order)
    return ColonResult(ideal=result, form=step.form, defect_degree=defect, linear=linear)


__all__ = [
    'QuotientRing',
    'LinearIdeal',
    'CyclicStep',
    'ColonResult',
    'linear_ideal',
    'contains',
    'cyclic_over',
    'colon',
]
