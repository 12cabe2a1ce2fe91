"""Binomial edge ideals of labeled graphs and their linear-form colon structure."""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from errors import EdgeIdealError
from algebra.ideals import (
    IdealHandle,
    colon_by_variable,
    colon_general,
    ideal_equal,
    is_quadratic_gb,
    linear_quotient_steps,
)
from algebra.orders import MonomialOrder
from algebra.polynomial import Polynomial, PolynomialRing
from graphs.graph import Graph, is_closed_labeling, neighbor_intervals
from koszul.filtration import Filtration
from koszul.linear_ideal import LinearIdeal, QuotientRing, colon, contains, cyclic_over

logger = logging.getLogger('koszul_toolkit.edge_ideals')


@dataclass
class EdgeRingContext:
    """``S = K[x1..xn, y1..yn]`` with the binomial edge ideal of ``graph`` and both standard orders."""

    graph: Graph
    ring: PolynomialRing
    ideal: IdealHandle
    revlex: MonomialOrder
    lex: MonomialOrder
    host: QuotientRing

    @property
    def n(self) -> int:
        return self.graph.n

    def x(self, i: int) -> Polynomial:
        return self.ring.var(f"x{i}")

    def y(self, i: int) -> Polynomial:
        return self.ring.var(f"y{i}")

    def x_index(self, i: int) -> int:
        return i - 1

    def y_index(self, i: int) -> int:
        return self.n + i - 1

    def xs(self, high: int, low: int) -> List[Polynomial]:
        """``x_high, ..., x_low``; empty when ``low > high``."""
        return [self.x(i) for i in range(high, low - 1, -1)]

    def ys(self, low: int, high: int) -> List[Polynomial]:
        """``y_low, ..., y_high``; empty when ``low > high``."""
        return [self.y(i) for i in range(low, high + 1)]

    def edge_binomial(self, i: int, j: int) -> Polynomial:
        return self.x(i) * self.y(j) - self.x(j) * self.y(i)

    def linear(self, forms: Sequence[Polynomial]) -> LinearIdeal:
        return LinearIdeal(self.host, forms)


def build_context(G: Graph) -> EdgeRingContext:
    """Ring, binomial edge ideal ``J_G`` and the orders revlex(y1>..>yn>x1>..>xn), lex(x1>..>xn>y1>..>yn)."""
    n = G.n
    xs = [f"x{i}" for i in range(1, n + 1)]
    ys = [f"y{i}" for i in range(1, n + 1)]
    ring = PolynomialRing(xs + ys)
    revlex = MonomialOrder.revlex(ring, ys + xs)
    lex = MonomialOrder.lex(ring, xs + ys)
    gens = []
    for i, j in G.sorted_edges():
        gens.append(ring.var(f"x{i}") * ring.var(f"y{j}") - ring.var(f"x{j}") * ring.var(f"y{i}"))
    ideal = IdealHandle(ring, gens)
    host = QuotientRing(ring, ideal, revlex)
    logger.debug(f"Binomial edge ideal of {G!r}: {len(gens)} generators")
    return EdgeRingContext(G, ring, ideal, revlex, lex, host)


def closed_iff_quadratic(ctx: EdgeRingContext) -> Tuple[bool, bool]:
    """(closedness of the labeling, quadratic reduced basis under the revlex order)."""
    closed = is_closed_labeling(ctx.graph).closed
    quadratic = is_quadratic_gb(ctx.ideal, ctx.revlex)
    if closed != quadratic:
        logger.warning(f"Closedness ({closed}) and quadratic basis ({quadratic}) disagree for {ctx.graph!r}")
    return closed, quadratic


def multidegree(f: Polynomial, n: int) -> List[Tuple[int, ...]]:
    """Distinct multidegrees of the terms of ``f`` with ``deg x_i = deg y_i = e_i``."""
    degrees = set()
    for monomial, _ in f.items():
        vector = [0] * n
        for index, exp in monomial.items():
            vector[index % n] += exp
        degrees.add(tuple(vector))
    return sorted(degrees)


def is_multihomogeneous(f: Polynomial, n: int) -> bool:
    return len(multidegree(f, n)) <= 1


def lex_revlex_coincide(ctx: EdgeRingContext) -> bool:
    lex_basis = set(ctx.ideal.groebner(ctx.lex).elements)
    revlex_basis = set(ctx.ideal.groebner(ctx.revlex).elements)
    return lex_basis == revlex_basis


@dataclass
class XColon:
    """``(J_G, x_n..x_{i+1}) : x_i`` with the neighbourhood formula when the labeling is closed."""

    index: int
    closed: bool
    colon: IdealHandle
    formula: Optional[LinearIdeal] = None
    certified: Optional[bool] = None


def colon_x_sequence(ctx: EdgeRingContext, i: int, use_elimination: bool = True) -> XColon:
    """Colon of the x-sequence at ``i``, certified against the Gröbner side.

    For a closed labeling the result is ``(x_n..x_{i+1}, y_j : j in N^>(i))``
    modulo ``J_G``. Non-closed labelings only get the Gröbner colon.

    The Gröbner side is the elimination colon unless ``use_elimination`` is
    false, in which case the revlex colon-by-last-variable shortcut is used.
    """
    intervals = neighbor_intervals(ctx.graph, i)
    prefix = ctx.ideal.plus(ctx.xs(ctx.n, i + 1))
    if use_elimination:
        gb_side = colon_general(prefix, ctx.x(i))
    else:
        gb_side = colon_by_variable(prefix, ctx.x_index(i))
    closed = is_closed_labeling(ctx.graph).closed
    if not closed:
        logger.info(f"Labeling is not closed; reporting the Gröbner colon at x{i} only")
        return XColon(i, False, gb_side)
    formula = ctx.linear(ctx.xs(ctx.n, i + 1) + [ctx.y(j) for j in sorted(intervals.above)])
    certified = ideal_equal(formula.ideal, gb_side, ctx.revlex)
    if not certified:
        logger.error(f"Neighbourhood colon formula fails at x{i} for {ctx.graph!r}")
    return XColon(i, True, gb_side, formula, certified)


def linear_quotient_report(ctx: EdgeRingContext) -> List[Tuple[int, bool]]:
    """Per vertex ``i`` (from n down to 1), whether the x-sequence colon is linear mod ``J_G``."""
    sequence = [ctx.x_index(i) for i in range(ctx.n, 0, -1)]
    return [(index + 1, linear) for index, linear in linear_quotient_steps(ctx.ideal, sequence)]


def has_linear_quotients_x(ctx: EdgeRingContext) -> bool:
    return all(linear for _, linear in linear_quotient_report(ctx))


@dataclass
class ColonIdentity:
    lhs: IdealHandle
    rhs: IdealHandle
    holds: bool


def _require_closed(ctx: EdgeRingContext) -> None:
    check = is_closed_labeling(ctx.graph)
    if not check.closed:
        raise EdgeIdealError(f"Labeling is not closed; violating triple {check.witness}")


def _above_interval(ctx: EdgeRingContext, k: int) -> Tuple[int, int]:
    """``(ell_k, i_k)`` for a vertex whose upper neighbourhood is ``{k+1..ell_k}``."""
    intervals = neighbor_intervals(ctx.graph, k)
    if not intervals.above or min(intervals.above) != k + 1 or not intervals.above_is_interval:
        raise EdgeIdealError(f"N^>({k}) is not a nonempty interval starting at {k + 1}")
    if intervals.i_next is None:
        raise EdgeIdealError(f"N^<({k + 1}) is empty")
    return intervals.ell, intervals.i_next


def casetwo_colon(ctx: EdgeRingContext, k: int, use_elimination: bool = True) -> ColonIdentity:
    """``(J_G, x_n..x_{k+1}, y_{k+2}..y_l) : y_{k+1} = (J_G, x_n..x_{k+1}, x_k..x_i, y_{k+2}..y_l)``.

    Raises:
        EdgeIdealError: If the labeling is not closed or the neighbourhoods are empty
    """
    _require_closed(ctx)
    ell, i = _above_interval(ctx, k)
    base = ctx.ideal.plus(ctx.xs(ctx.n, k + 1) + ctx.ys(k + 2, ell))
    if use_elimination:
        lhs = colon_general(base, ctx.y(k + 1))
    else:
        lhs = colon_by_variable(base, ctx.y_index(k + 1))
    rhs = ctx.ideal.plus(ctx.xs(ctx.n, i) + ctx.ys(k + 2, ell))
    return ColonIdentity(lhs, rhs, ideal_equal(lhs, rhs, ctx.revlex))


def casetwo_regular(ctx: EdgeRingContext, k: int, s: int, use_elimination: bool = True) -> bool:
    """Whether ``y_s`` is regular modulo ``(J_G, x_n..x_{i_k}, y_{s+1}..y_{l_k})``.

    Raises:
        EdgeIdealError: If ``s`` is outside ``k+2..l_k`` or the labeling is not closed
    """
    _require_closed(ctx)
    ell, i = _above_interval(ctx, k)
    if not k + 2 <= s <= ell:
        raise EdgeIdealError(f"s={s} outside {k + 2}..{ell}")
    base = ctx.ideal.plus(ctx.xs(ctx.n, i) + ctx.ys(s + 1, ell))
    if use_elimination:
        quotient = colon_general(base, ctx.y(s))
    else:
        quotient = colon_by_variable(base, ctx.y_index(s))
    return ideal_equal(quotient, base, ctx.revlex)


def build_koszul_filtration(ctx: EdgeRingContext) -> Filtration:
    """Explicit Koszul filtration of ``S / J_G`` for a closed labeling.

    Members: ``(x_n..x_1, y_n..y_k)`` and ``(x_n..x_k)`` for every ``k``; for
    every ``k`` with nonempty ``N^>(k) = {k+1..l}`` the ideals
    ``(x_n..x_{k+1}, y_{k+1}..y_l)``, ``(x_n..x_{k+1}, y_{k+2}..y_l)`` and
    ``(x_n..x_{i_k}, y_s..y_l)`` for ``k+2 <= s <= l``; and the zero ideal.

    Raises:
        EdgeIdealError: If the labeling is not closed
    """
    _require_closed(ctx)
    n = ctx.n
    F = Filtration(ctx.host, name="closed-graph filtration")
    F.add(ctx.host.zero_ideal())
    all_x = ctx.xs(n, 1)
    previous_y = None
    previous_x = None
    for k in range(n, 0, -1):
        y_member = ctx.linear(all_x + [ctx.y(j) for j in range(n, k - 1, -1)])
        x_member = ctx.linear(ctx.xs(n, k))
        F.add(y_member)
        F.add(x_member)
        if previous_y is not None:
            F.add_hint(y_member, previous_y)
        if previous_x is not None:
            F.add_hint(x_member, previous_x)
        previous_y = y_member
        previous_x = x_member
    F.add_hint(ctx.linear(all_x + [ctx.y(n)]), ctx.linear(all_x))
    for k in range(1, n + 1):
        intervals = neighbor_intervals(ctx.graph, k)
        if not intervals.above:
            continue
        ell = intervals.ell
        upper = ctx.linear(ctx.xs(n, k + 1) + ctx.ys(k + 1, ell))
        lower = ctx.linear(ctx.xs(n, k + 1) + ctx.ys(k + 2, ell))
        F.add(upper)
        F.add(lower)
        F.add_hint(upper, lower)
        i_k = intervals.i_next
        for s in range(k + 2, ell + 1):
            F.add(ctx.linear(ctx.xs(n, i_k) + ctx.ys(s, ell)))
    logger.info(f"Built filtration with {len(F)} members for {ctx.graph!r}")
    return F


def x_flag(ctx: EdgeRingContext) -> List[LinearIdeal]:
    """The chain ``0, (x_n), (x_n, x_{n-1}), ..., (x_n..x_1)``."""
    return [ctx.linear(ctx.xs(ctx.n, k)) for k in range(ctx.n + 1, 0, -1)]


def is_linear_flag(host: QuotientRing, chain: Sequence[LinearIdeal]) -> bool:
    """Each step of ``chain`` is a cyclic extension with linearly generated colon."""
    for lower, upper in zip(chain, chain[1:]):
        if not contains(upper, lower):
            return False
        step = cyclic_over(upper, lower)
        if not step.is_cyclic or not colon(lower, upper, step).is_linear:
            return False
    return True


@dataclass
class CUniversalCheck:
    """Outcome of the variable-colon test; ``witness`` lies in ``J_G : x_vertex`` but not in ``J_G``."""

    holds: bool
    vertex: Optional[int] = None
    witness: Optional[Polynomial] = None
    full: Optional[bool] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            'holds': self.holds,
            'vertex': self.vertex,
            'witness': str(self.witness) if self.witness is not None else None,
            'full': self.full,
        }


def _variable_generated(ctx: EdgeRingContext, C: IdealHandle) -> bool:
    members = [v for v in ctx.ring.gens() if C.contains(v, ctx.revlex)]
    return ideal_equal(C, ctx.ideal.plus(members), ctx.revlex)


def _missing_edge_binomial(ctx: EdgeRingContext, i: int) -> Optional[Polynomial]:
    neighbors = sorted(ctx.graph.neighbors(i))
    for a, j in enumerate(neighbors):
        for k in neighbors[a + 1:]:
            if not ctx.graph.has_edge(j, k):
                return ctx.edge_binomial(j, k)
    return None


def _colon_witness(ctx: EdgeRingContext, i: int, C: IdealHandle) -> Polynomial:
    """Element of ``C = J_G : x_i`` outside ``J_G`` plus the variables in ``C``."""
    binomial = _missing_edge_binomial(ctx, i)
    if binomial is not None:
        return binomial
    members = [v for v in ctx.ring.gens() if C.contains(v, ctx.revlex)]
    base = ctx.ideal.plus(members)
    for g in C.groebner(ctx.revlex).elements:
        if not base.contains(g, ctx.revlex):
            return g
    raise EdgeIdealError(f"J_G : x{i} is generated by variables")


def c_universal_full(ctx: EdgeRingContext) -> bool:
    """Every ideal generated by variables has a one-smaller such ideal whose colon is again variable-generated.

    Raises:
        EdgeIdealError: For more than three vertices
    """
    if ctx.n > 3:
        raise EdgeIdealError("Full subset verification is limited to three vertices")
    variables = list(range(ctx.ring.dimension))
    gens = ctx.ring.gens()
    for size in range(1, len(variables) + 1):
        for subset in itertools.combinations(variables, size):
            certified = False
            for v in subset:
                rest = ctx.ideal.plus(gens[u] for u in subset if u != v)
                if _variable_generated(ctx, colon_by_variable(rest, v)):
                    certified = True
                    break
            if not certified:
                logger.info(f"Subset {[ctx.ring.names[u] for u in subset]} has no variable-generated colon")
                return False
    return True


def c_universal_necessary(ctx: EdgeRingContext) -> CUniversalCheck:
    """Check ``J_G : x_i = J_G + (variables in it)`` for every ``i``.

    The first failing vertex is reported with the binomial ``x_j y_k - x_k y_j``
    of a missing edge between two of its neighbours. Without such an edge the
    witness is a Gröbner element of the colon that the variables do not explain.
    """
    result = CUniversalCheck(True)
    for i in range(1, ctx.n + 1):
        C = colon_by_variable(ctx.ideal, ctx.x_index(i))
        if not _variable_generated(ctx, C):
            result = CUniversalCheck(False, i, _colon_witness(ctx, i, C))
            break
    if ctx.n <= 3:
        result.full = c_universal_full(ctx)
    return result


__all__ = [
    'EdgeRingContext',
    'build_context',
    'closed_iff_quadratic',
    'multidegree',
    'is_multihomogeneous',
    'lex_revlex_coincide',
    'XColon',
    'colon_x_sequence',
    'linear_quotient_report',
    'has_linear_quotients_x',
    'ColonIdentity',
    'casetwo_colon',
    'casetwo_regular',
    'build_koszul_filtration',
    'x_flag',
    'is_linear_flag',
    'CUniversalCheck',
    'c_universal_necessary',
    'c_universal_full',
]
