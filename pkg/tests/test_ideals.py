import unittest
from itertools import combinations_with_replacement

from hypothesis import HealthCheck, given, settings, strategies as st

from errors import GroebnerError, PolynomialError
from algebra.ideals import (
    IdealHandle,
    colon_by_ideal,
    colon_by_linear_form,
    colon_by_variable,
    colon_formula_quadratic,
    colon_general,
    degree_one_part,
    eliminate,
    has_linear_quotients,
    ideal_equal,
    initial_ideal,
    intersect,
    is_linearly_generated_mod,
    is_quadratic_gb,
    kernel_of_monomial_map,
    linear_generation_defect,
    linear_quotient_steps,
    normal_form,
    squarefree_veronese_images,
)
from algebra.monomial import Monomial
from algebra.orders import MonomialOrder
from algebra.polynomial import Polynomial
from tests.helpers import ideal, poly, ring


class TestMembership(unittest.TestCase):
    def setUp(self):
        self.ring = ring('x', 'y', 'z')
        self.I = ideal(self.ring, 'x*y - z^2', 'y^2')

    def test_contains(self):
        self.assertTrue(self.I.contains(poly(self.ring, 'x^2*y - x*z^2')))
        self.assertFalse(self.I.contains(poly(self.ring, 'x*y')))
        self.assertTrue(self.I.contains_ideal(ideal(self.ring, 'y^3', 'x*y^2 - y*z^2')))

    def test_normal_form_is_canonical(self):
        f = poly(self.ring, 'x*y + y^2 + z')
        self.assertEqual(normal_form(f, self.I), poly(self.ring, 'z^2 + z'))

    def test_equality_ignores_presentation(self):
        J = ideal(self.ring, 'x*y - z^2', 'y^2', 'y^2 + x*y - z^2')
        self.assertTrue(ideal_equal(self.I, J))
        self.assertEqual(self.I.key(), J.key())
        self.assertFalse(ideal_equal(self.I, ideal(self.ring, 'y^2')))

    def test_ring_mismatch(self):
        with self.assertRaises(PolynomialError):
            ideal_equal(self.I, ideal(ring('x', 'y'), 'x'))
        with self.assertRaises(PolynomialError):
            normal_form(ring('u').var('u'), self.I)

    def test_initial_ideal(self):
        ini = initial_ideal(ideal(self.ring, 'x^2 - y*z', 'x*y'))
        self.assertTrue(all(len(g) == 1 for g in ini.generators))
        self.assertTrue(is_quadratic_gb(ideal(self.ring, 'x*y', 'x*z')))


class TestColons(unittest.TestCase):
    def test_colon_example_file_values(self):
        r = ring('x1', 'x2', 'x3')
        I = ideal(r, 'x1*x3 - x2*x3')
        expected = ideal(r, 'x1 - x2')
        self.assertTrue(ideal_equal(colon_by_variable(I, 2), expected))
        self.assertTrue(ideal_equal(colon_general(I, r.var('x3')), expected))
        self.assertTrue(ideal_equal(colon_by_linear_form(I, r.var('x3')), expected))

    def test_colon_by_linear_form(self):
        r = ring('x', 'y')
        I = ideal(r, 'x^2 - y^2')
        self.assertTrue(ideal_equal(colon_by_linear_form(I, poly(r, 'x - y')), ideal(r, 'x + y')))
        self.assertTrue(ideal_equal(colon_general(I, poly(r, 'x - y')), ideal(r, 'x + y')))

    def test_regular_element(self):
        r = ring('x', 'y')
        I = ideal(r, 'x*y')
        self.assertTrue(ideal_equal(colon_by_linear_form(I, poly(r, 'x + y')), I))

    def test_non_homogeneous_falls_back(self):
        r = ring('x', 'y')
        I = ideal(r, 'x*y - y')
        self.assertTrue(ideal_equal(colon_by_variable(I, 1), ideal(r, 'x - 1')))

    def test_zero_divisor_rejected(self):
        r = ring('x', 'y')
        with self.assertRaises(PolynomialError):
            colon_general(ideal(r, 'x'), r.zero())
        with self.assertRaises(PolynomialError):
            colon_by_linear_form(ideal(r, 'x'), r.zero())

    def test_colon_by_constant(self):
        r = ring('x')
        I = ideal(r, 'x^2')
        self.assertTrue(ideal_equal(colon_general(I, r.constant(3)), I))

    def test_colon_by_ideal(self):
        r = ring('x', 'y')
        I = ideal(r, 'x*y')
        self.assertTrue(ideal_equal(colon_by_ideal(I, ideal(r, 'x', 'y')), I))
        self.assertTrue(ideal_equal(colon_by_ideal(I, IdealHandle(r)), IdealHandle(r, [r.one()])))

    def test_colon_formula_quadratic(self):
        r = ring('x', 'y', 'z')
        order = r.default_order()
        I = ideal(r, 'x*y')
        formula = colon_formula_quadratic(I, 2, order)
        gb_side = colon_by_variable(I.plus([r.var('z')]), 1)
        self.assertTrue(ideal_equal(formula, gb_side))
        self.assertTrue(ideal_equal(formula, ideal(r, 'x', 'z')))


class TestElimination(unittest.TestCase):
    def test_eliminate_parameter(self):
        r = ring('t', 'x', 'y')
        result = eliminate(ideal(r, 'x - t', 'y - t^2'), ['t'])
        self.assertEqual(result.ring.names, ('x', 'y'))
        self.assertTrue(ideal_equal(result, ideal(result.ring, 'y - x^2')))

    def test_empty_block(self):
        r = ring('x')
        I = ideal(r, 'x')
        self.assertIs(eliminate(I, []), I)

    def test_intersection(self):
        r = ring('x', 'y')
        self.assertTrue(ideal_equal(intersect(ideal(r, 'x'), ideal(r, 'y')), ideal(r, 'x*y')))
        self.assertTrue(ideal_equal(intersect(ideal(r, 'x^2'), ideal(r, 'x*y')), ideal(r, 'x^2*y')))

    def test_kernel_of_monomial_map(self):
        target = ring('t1', 't2')
        images = [Monomial({0: 2}), Monomial({0: 1, 1: 1}), Monomial({1: 2})]
        kernel = kernel_of_monomial_map(images, target)
        self.assertEqual(kernel.ring.names, ('x1', 'x2', 'x3'))
        self.assertTrue(ideal_equal(kernel, ideal(kernel.ring, 'x1*x3 - x2^2')))

    def test_kernel_rejects_clashing_names(self):
        target = ring('x1', 'x2')
        with self.assertRaises(PolynomialError):
            kernel_of_monomial_map([Monomial({0: 1})], target)
        with self.assertRaises(PolynomialError):
            kernel_of_monomial_map([], target)

    def test_squarefree_veronese_images(self):
        target, images = squarefree_veronese_images(4, 2)
        self.assertEqual(target.names, ('t1', 't2', 't3', 't4'))
        self.assertEqual(len(images), 6)
        self.assertEqual(images[0], Monomial({0: 1, 1: 1}))
        self.assertEqual(images[-1], Monomial({2: 1, 3: 1}))


class TestLinearParts(unittest.TestCase):
    def setUp(self):
        self.ring = ring('x', 'y', 'z')

    def test_degree_one_part(self):
        forms = degree_one_part(ideal(self.ring, 'x - y', 'x*z'))
        self.assertEqual(forms, [poly(self.ring, 'x - y')])
        self.assertEqual(degree_one_part(ideal(self.ring, 'x*y')), [])

    def test_linear_generation_defect(self):
        base = ideal(self.ring, 'y')
        self.assertIsNone(linear_generation_defect(base, ideal(self.ring, 'y', 'z')))
        self.assertEqual(linear_generation_defect(base, ideal(self.ring, 'y', 'x^2')), 2)
        self.assertFalse(is_linearly_generated_mod(base, ideal(self.ring, 'y', 'x^2')))
        with self.assertRaises(GroebnerError):
            linear_generation_defect(ideal(self.ring, 'z'), ideal(self.ring, 'y'))

    def test_linear_quotients(self):
        I = ideal(self.ring, 'x*y', 'y*z')
        steps = linear_quotient_steps(I, [2, 1, 0])
        self.assertEqual([index for index, _ in steps], [2, 1, 0])
        self.assertTrue(has_linear_quotients(I, [2, 1, 0]))

    def test_not_linear_quotients(self):
        r = ring('x', 'y')
        I = ideal(r, 'x^2*y')
        self.assertFalse(has_linear_quotients(I, [1, 0]))


_QUADRATICS = [Monomial.from_dense(e) for e in
               {tuple(sum(1 for v in pair if v == i) for i in range(4))
                for pair in combinations_with_replacement(range(4), 2)}]
_quadratic_gen = st.dictionaries(st.sampled_from(_QUADRATICS), st.sampled_from([-2, -1, 1, 2]),
                                 min_size=1, max_size=3)


@given(gens=st.lists(_quadratic_gen, min_size=1, max_size=3), variable=st.integers(0, 3))
@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_fast_colon_agrees_with_elimination(gens, variable):
    r = ring('a', 'b', 'c', 'd')
    I = IdealHandle(r, [Polynomial(r, g) for g in gens])
    fast = colon_by_variable(I, variable)
    slow = colon_general(I, r.gens()[variable])
    assert ideal_equal(fast, slow)
