"""Binomial edge ideals: closedness, colon formulas and explicit Koszul filtrations."""

import logging

from .binomial_edge import (
    CUniversalCheck,
    ColonIdentity,
    EdgeRingContext,
    XColon,
    build_context,
    build_koszul_filtration,
    c_universal_full,
    c_universal_necessary,
    casetwo_colon,
    casetwo_regular,
    closed_iff_quadratic,
    colon_x_sequence,
    has_linear_quotients_x,
    is_linear_flag,
    is_multihomogeneous,
    lex_revlex_coincide,
    linear_quotient_report,
    multidegree,
    x_flag,
)

logger = logging.getLogger('koszul_toolkit.edge_ideals')

__all__ = [
    'CUniversalCheck',
    'ColonIdentity',
    'EdgeRingContext',
    'XColon',
    'build_context',
    'build_koszul_filtration',
    'c_universal_full',
    'c_universal_necessary',
    'casetwo_colon',
    'casetwo_regular',
    'closed_iff_quadratic',
    'colon_x_sequence',
    'has_linear_quotients_x',
    'is_linear_flag',
    'is_multihomogeneous',
    'lex_revlex_coincide',
    'linear_quotient_report',
    'multidegree',
    'x_flag',
]
