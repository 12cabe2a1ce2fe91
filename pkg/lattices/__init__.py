"""Posets, distributive lattices and Hibi rings."""

import logging

from .poset import DEFAULT_POSET_BOUND, Poset, ideal_name
from .lattice import DEFAULT_LATTICE_BOUND, DistributiveLattice, lattice_from_poset
from .hibi import (
    CoverColon,
    HibiRing,
    certify_covers,
    cogenerated_ideal,
    cogenerated_ideal_literal,
    colon_cover,
    covering_pairs,
    hibi_koszul_filtration,
    hibi_order,
    hibi_ring,
    join_meet_ideal,
    poset_ideals,
    reduced_family_check,
    reduced_family_filtration,
    upset_filtration,
)

logger = logging.getLogger('koszul_toolkit.lattices')

__all__ = [
    'DEFAULT_POSET_BOUND',
    'DEFAULT_LATTICE_BOUND',
    'Poset',
    'ideal_name',
    'DistributiveLattice',
    'lattice_from_poset',
    'CoverColon',
    'HibiRing',
    'certify_covers',
    'cogenerated_ideal',
    'cogenerated_ideal_literal',
    'colon_cover',
    'covering_pairs',
    'hibi_koszul_filtration',
    'hibi_order',
    'hibi_ring',
    'join_meet_ideal',
    'poset_ideals',
    'reduced_family_check',
    'reduced_family_filtration',
    'upset_filtration',
]
