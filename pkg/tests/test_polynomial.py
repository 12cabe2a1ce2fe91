import unittest
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from unittest import mock

import pytest
from hypothesis import given, settings, strategies as st

from errors import OrderError, ParseError, PolynomialError
from algebra.monomial import Monomial, expand_name_range
from algebra.orders import Comparison, MonomialOrder, compare, parse_order_spec
from algebra.poly_parser import format_polynomial, parse_polynomial
from algebra.polynomial import Polynomial, PolynomialRing, divide_exact, reduce
from tests.helpers import poly, ring


class TestMonomial(unittest.TestCase):
    def test_arithmetic(self):
        a = Monomial({0: 2, 2: 1})
        b = Monomial({0: 1, 1: 1})
        self.assertEqual(a * b, Monomial({0: 3, 1: 1, 2: 1}))
        self.assertEqual(a.lcm(b), Monomial({0: 2, 1: 1, 2: 1}))
        self.assertEqual(a.gcd(b), Monomial({0: 1}))
        self.assertEqual(a.degree, 3)
        self.assertTrue(Monomial.variable(0).divides(a))
        self.assertEqual(a / Monomial.variable(2), Monomial.variable(0, 2))

    def test_zero_exponents_are_dropped(self):
        self.assertEqual(Monomial({0: 0, 3: 1}), Monomial.variable(3))
        self.assertTrue(Monomial({1: 0}).is_one())
        self.assertEqual(Monomial.one().max_index, -1)

    def test_division_by_non_divisor_fails(self):
        with self.assertRaises(PolynomialError):
            Monomial.variable(0) / Monomial.variable(1)

    def test_negative_exponent_rejected(self):
        with self.assertRaises(PolynomialError):
            Monomial({0: -1})

    def test_coprime(self):
        self.assertTrue(Monomial.variable(0).is_coprime(Monomial.variable(1, 3)))
        self.assertFalse(Monomial({0: 1, 1: 1}).is_coprime(Monomial.variable(1)))

    def test_dense_round_trip(self):
        m = Monomial.from_dense([1, 0, 2])
        self.assertEqual(m.dense(4), (1, 0, 2, 0))
        self.assertEqual(m.support(), (0, 2))


class TestNameRanges(unittest.TestCase):
    def test_ascending_and_descending(self):
        self.assertEqual(expand_name_range('x1..x4'), ['x1', 'x2', 'x3', 'x4'])
        self.assertEqual(expand_name_range('y3..y1'), ['y3', 'y2', 'y1'])
        self.assertEqual(expand_name_range('t'), ['t'])

    def test_mixed_prefix_rejected(self):
        with self.assertRaises(ParseError):
            expand_name_range('x1..y3')

    def test_invalid_name_rejected(self):
        with self.assertRaises(ParseError):
            expand_name_range('1x')


class TestOrders(unittest.TestCase):
    def setUp(self):
        self.ring = ring('x', 'y', 'z')
        self.revlex = MonomialOrder.revlex(self.ring, ['x', 'y', 'z'])
        self.lex = MonomialOrder.lex(self.ring, ['x', 'y', 'z'])

    def test_revlex_prefers_small_tail(self):
        xz = Monomial({0: 1, 2: 1})
        yy = Monomial({1: 2})
        self.assertEqual(compare(yy, xz, self.revlex), Comparison.GREATER)
        self.assertEqual(compare(yy, xz, self.lex), Comparison.LESS)

    def test_revlex_is_graded(self):
        self.assertEqual(compare(Monomial({2: 2}), Monomial.variable(0), self.revlex), Comparison.GREATER)
        self.assertEqual(compare(Monomial({2: 2}), Monomial.variable(0), self.lex), Comparison.LESS)

    def test_equal(self):
        m = Monomial({0: 1, 1: 1})
        self.assertEqual(compare(m, Monomial({1: 1, 0: 1}), self.revlex), Comparison.EQUAL)

    def test_priority_changes_order(self):
        zyx = MonomialOrder.revlex(self.ring, ['z', 'y', 'x'])
        self.assertEqual(zyx.least_variable(), 0)
        self.assertTrue(zyx.is_revlex_with_last(0))
        self.assertFalse(self.revlex.is_revlex_with_last(0))

    def test_elimination_block(self):
        order = MonomialOrder.elimination(self.ring, ['z'])
        # anything containing z beats any monomial without it
        self.assertEqual(compare(Monomial.variable(2), Monomial.variable(0, 5), order), Comparison.GREATER)

    def test_outside_ring_rejected(self):
        with self.assertRaises(OrderError):
            compare(Monomial.variable(5), Monomial.one(), self.revlex)

    def test_incomplete_priority_rejected(self):
        with self.assertRaises(OrderError):
            MonomialOrder.revlex(self.ring, ['x', 'y'])

    def test_parse_spec(self):
        r = ring('x1', 'x2', 'y1', 'y2')
        order = parse_order_spec('revlex:y1..y2>x1..x2', r)
        self.assertEqual(order.kind, 'revlex')
        self.assertEqual(order.priority, (2, 3, 0, 1))
        self.assertEqual(parse_order_spec(order.spec(), r), order)

    def test_parse_elimination_spec(self):
        r = ring('t', 'x', 'y')
        order = parse_order_spec('elim:{t}:then:lex:x>y', r)
        self.assertEqual(order.kind, 'block')
        self.assertEqual(order.blocks[1].kind, 'lex')
        self.assertEqual(order.spec(), 'elim:{t}:then:lex:x>y')

    def test_parse_bad_kind(self):
        with self.assertRaises(OrderError):
            parse_order_spec('deglex:x>y>z', self.ring)

    def test_parse_unknown_variable(self):
        with self.assertRaises(PolynomialError):
            parse_order_spec('lex:x>y>w', self.ring)

    def test_key_cache_is_bounded(self):
        order = MonomialOrder.revlex(self.ring, ['x', 'y', 'z'])
        with mock.patch('algebra.orders.KEY_CACHE_LIMIT', 4):
            for e in range(10):
                order.key(Monomial.variable(0, e + 1))
        self.assertLessEqual(len(order._keys), 4)
        self.assertEqual(order.key(Monomial.variable(0, 3)), self.revlex.key(Monomial.variable(0, 3)))

    def test_keys_from_worker_threads(self):
        order = MonomialOrder.revlex(self.ring, ['x', 'y', 'z'])
        monomials = [Monomial.from_dense((a, b, c)) for a in range(4) for b in range(4) for c in range(4)]
        with ThreadPoolExecutor(max_workers=8) as executor:
            keys = list(executor.map(lambda m: order.key(m), monomials * 8))
        expected = [order._compute_key(m) for m in monomials]
        self.assertEqual(keys, expected * 8)
        self.assertEqual(len(order._keys), len(monomials))


class TestPolynomial(unittest.TestCase):
    def setUp(self):
        self.ring = ring('x', 'y', 'z')
        self.x, self.y, self.z = self.ring.gens()

    def test_arithmetic_cancels(self):
        f = (self.x + self.y) * (self.x - self.y)
        self.assertEqual(f, self.x ** 2 - self.y ** 2)
        self.assertTrue((f - f).is_zero())
        self.assertEqual(f.total_degree(), 2)
        self.assertEqual(self.ring.zero().total_degree(), -1)

    def test_scalars(self):
        f = 2 * self.x + 1
        self.assertEqual(f - 1, self.x.scale(2))
        self.assertEqual(1 - self.x, -(self.x - 1))
        self.assertEqual(self.ring.constant(3), 3)
        self.assertEqual(f.coefficient(Monomial.variable(0)), Fraction(2))

    def test_negative_power_rejected(self):
        with self.assertRaises(PolynomialError):
            self.x ** -1

    def test_predicates(self):
        self.assertTrue((self.x * self.y - self.z ** 2).is_homogeneous())
        self.assertFalse((self.x * self.y - self.z).is_homogeneous())
        self.assertTrue((self.x - 2 * self.z).is_linear_form())
        self.assertEqual((self.x - 2 * self.z).linear_coefficients(), (1, 0, -2))
        self.assertTrue(self.ring.constant(5).is_constant())

    def test_leading_term_and_monic(self):
        order = MonomialOrder.lex(self.ring, ['x', 'y', 'z'])
        f = 3 * self.y ** 2 + 6 * self.x * self.z
        self.assertEqual(f.leading_term(order), (Fraction(6), Monomial({0: 1, 2: 1})))
        self.assertEqual(f.monic(order), self.x * self.z + Fraction(1, 2) * self.y ** 2)
        with self.assertRaises(PolynomialError):
            self.ring.zero().leading_term(order)

    def test_substitute(self):
        f = self.x * self.y
        g = f.substitute({0: self.y + self.z})
        self.assertEqual(g, self.y ** 2 + self.y * self.z)

    def test_map_to_ring(self):
        bigger = self.ring.extend(['t'])
        f = (self.x - self.z).map_to_ring(bigger)
        self.assertEqual(f.ring, bigger)
        self.assertEqual(f.map_to_ring(self.ring), self.x - self.z)

    def test_ring_rejects_duplicates(self):
        with self.assertRaises(PolynomialError):
            PolynomialRing(['x', 'x'])

    def test_fresh_name(self):
        r = ring('t', 't1')
        self.assertEqual(r.fresh_name('t'), 't2')

    def test_subring(self):
        self.assertEqual(self.ring.subring(['z', 'x']).names, ('x', 'z'))
        with self.assertRaises(PolynomialError):
            self.ring.subring(['w'])


class TestDivision(unittest.TestCase):
    def test_textbook_division(self):
        r = ring('x', 'y')
        order = MonomialOrder.lex(r, ['x', 'y'])
        f = poly(r, 'x^2*y + x*y^2 + y^2')
        divisors = [poly(r, 'x*y - 1'), poly(r, 'y^2 - 1')]
        result = reduce(f, divisors, order)
        self.assertEqual(result.remainder, poly(r, 'x + y + 1'))
        self.assertEqual(result.quotients, (poly(r, 'x + y'), r.one()))
        recombined = sum((q * d for q, d in zip(result.quotients, divisors)), r.zero()) + result.remainder
        self.assertEqual(recombined, f)

    def test_divide_exact(self):
        r = ring('x', 'y')
        self.assertEqual(divide_exact(poly(r, 'x^2 - y^2'), poly(r, 'x - y')), poly(r, 'x + y'))
        with self.assertRaises(PolynomialError):
            divide_exact(poly(r, 'x^2 + y^2'), poly(r, 'x - y'))

    def test_zero_divisor_rejected(self):
        r = ring('x')
        with self.assertRaises(PolynomialError):
            reduce(r.var('x'), [r.zero()], r.default_order())


class TestParser(unittest.TestCase):
    def setUp(self):
        self.ring = ring('x1', 'x2', 'y1', 'y2')

    def test_parse_and_format(self):
        f = parse_polynomial('x1*y2 - x2*y1', self.ring)
        self.assertEqual(str(f), 'x1*y2 - x2*y1')

    def test_coefficients_and_juxtaposition(self):
        f = parse_polynomial('3/2*x1^2 + 2x2 - 1', self.ring)
        self.assertEqual(f.coefficient(Monomial.variable(0, 2)), Fraction(3, 2))
        self.assertEqual(f.coefficient(Monomial.variable(1)), 2)
        self.assertEqual(f.coefficient(Monomial.one()), -1)
        self.assertEqual(format_polynomial(f), '3/2*x1^2 + 2*x2 - 1')

    def test_leading_sign_and_zero(self):
        self.assertEqual(str(parse_polynomial('-x1 + x1', self.ring)), '0')
        self.assertEqual(parse_polynomial('-y1', self.ring), -self.ring.var('y1'))

    def test_unknown_variable_column(self):
        with self.assertRaises(ParseError) as ctx:
            parse_polynomial('x1 + q', self.ring, line=4, source='in.ideal')
        self.assertEqual(ctx.exception.line, 4)
        self.assertEqual(ctx.exception.column, 6)
        self.assertIn('in.ideal:4:6', str(ctx.exception))
        self.assertNotIn("missing '*'", str(ctx.exception))

    def test_juxtaposed_variables_hint(self):
        with self.assertRaises(ParseError) as ctx:
            parse_polynomial('x2 - x1y2', self.ring)
        self.assertEqual(ctx.exception.column, 6)
        self.assertIn("Unknown variable 'x1y2'", str(ctx.exception))
        self.assertIn("missing '*' between 'x1' and 'y2'", str(ctx.exception))

    def test_malformed(self):
        for text in ['', 'x1 +', 'x1 * * x2', 'x1^y1', 'x1 $ x2', '1/0*x1']:
            with self.subTest(text=text):
                with self.assertRaises(ParseError):
                    parse_polynomial(text, self.ring)


_small = st.integers(min_value=-3, max_value=3)
_terms = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), _small, max_size=5)


def _build(r, terms):
    return Polynomial(r, {Monomial.from_dense(e): c for e, c in terms.items()})


@given(_terms, _terms, _terms)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    r = ring('x', 'y', 'z')
    f, g, h = _build(r, a), _build(r, b), _build(r, c)
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f + g == g + f


@given(_terms)
@settings(max_examples=60, deadline=None)
def test_format_parse_agree(a):
    r = ring('x', 'y', 'z')
    f = _build(r, a)
    assert parse_polynomial(str(f), r) == f


@given(_terms, _terms)
@settings(max_examples=40, deadline=None)
def test_division_identity(a, b):
    r = ring('x', 'y', 'z')
    f, g = _build(r, a), _build(r, b)
    if g.is_zero():
        return
    order = r.default_order()
    result = reduce(f, [g], order)
    assert result.quotients[0] * g + result.remainder == f
    lead = g.leading_monomial(order)
    assert not any(lead.divides(m) for m in result.remainder.monomials())


@pytest.mark.parametrize('spec', ['lex:x>y>z', 'revlex:z>x>y', 'elim:{y}:then:revlex:x>z'])
def test_order_spec_round_trip(spec):
    r = ring('x', 'y', 'z')
    assert parse_order_spec(spec, r).spec() == spec
