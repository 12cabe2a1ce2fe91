"""Polynomial arithmetic, monomial orders and the Gröbner engine."""

import logging

from .monomial import Monomial, Variable
from .orders import Comparison, MonomialOrder, compare, parse_order_spec
from .polynomial import DivisionResult, Polynomial, PolynomialRing, divide_exact, leading_term, reduce
from .poly_parser import format_polynomial, parse_polynomial
from .groebner import GroebnerBasis, buchberger, configure, is_groebner_basis, reduce_basis
from .ideals import (
    IdealHandle,
    colon_by_linear_form,
    colon_by_variable,
    colon_general,
    degree_one_part,
    eliminate,
    ideal_equal,
    initial_ideal,
    intersect,
    is_linearly_generated_mod,
    is_quadratic_gb,
    kernel_of_monomial_map,
    normal_form,
)

logger = logging.getLogger('koszul_toolkit.algebra')

__all__ = [
    'Monomial',
    'Variable',
    'Comparison',
    'MonomialOrder',
    'compare',
    'parse_order_spec',
    'DivisionResult',
    'Polynomial',
    'PolynomialRing',
    'divide_exact',
    'leading_term',
    'reduce',
    'format_polynomial',
    'parse_polynomial',
    'GroebnerBasis',
    'buchberger',
    'configure',
    'is_groebner_basis',
    'reduce_basis',
    'IdealHandle',
    'colon_by_linear_form',
    'colon_by_variable',
    'colon_general',
    'degree_one_part',
    'eliminate',
    'ideal_equal',
    'initial_ideal',
    'intersect',
    'is_linearly_generated_mod',
    'is_quadratic_gb',
    'kernel_of_monomial_map',
    'normal_form',
]
