"""Quotient rings, linear ideals and the Koszul filtration verifier."""

import logging

from .linear_ideal import (
    ColonResult,
    CyclicStep,
    LinearIdeal,
    QuotientRing,
    colon,
    contains,
    cyclic_over,
    linear_ideal,
)
from .filtration import (
    Certificate,
    Filtration,
    FiltrationReport,
    MemberFailure,
    MinimalityReport,
    WitnessOption,
    is_flag,
    minimality_probe,
    recheck_certificate,
    union,
    verify,
    witness_options,
)

logger = logging.getLogger('koszul_toolkit.koszul')

__all__ = [
    'ColonResult',
    'CyclicStep',
    'LinearIdeal',
    'QuotientRing',
    'colon',
    'contains',
    'cyclic_over',
    'linear_ideal',
    'Certificate',
    'Filtration',
    'FiltrationReport',
    'MemberFailure',
    'MinimalityReport',
    'WitnessOption',
    'is_flag',
    'minimality_probe',
    'recheck_certificate',
    'union',
    'verify',
    'witness_options',
]
