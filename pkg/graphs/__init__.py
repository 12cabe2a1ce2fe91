"""Graphs on 1..n, closedness and closed-labeling search."""

import logging

from .graph import (
    ClosednessCheck,
    Graph,
    NeighborIntervals,
    complete_graph,
    from_networkx,
    is_closed_labeling,
    is_complete,
    is_connected,
    maximal_cliques,
    neighbor_intervals,
    path_graph,
    relabel,
    star_graph,
)
from .labeling import DEFAULT_LABELING_BOUND, find_closed_labeling, random_relabelings_fail

logger = logging.getLogger('koszul_toolkit.graphs')

__all__ = [
    'ClosednessCheck',
    'Graph',
    'NeighborIntervals',
    'complete_graph',
    'from_networkx',
    'is_closed_labeling',
    'is_complete',
    'is_connected',
    'maximal_cliques',
    'neighbor_intervals',
    'path_graph',
    'relabel',
    'star_graph',
    'DEFAULT_LABELING_BOUND',
    'find_closed_labeling',
    'random_relabelings_fail',
]
