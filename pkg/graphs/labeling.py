"""Exhaustive search for a closed labeling, with pruning on partial labelings."""

import logging
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import List, Optional, Tuple

from errors import GraphError
from graphs.graph import Graph, is_closed_labeling, relabel

logger = logging.getLogger('koszul_toolkit.graphs')

DEFAULT_LABELING_BOUND = 9


def _extends_cleanly(G: Graph, placed: List[int], vertex: int) -> bool:
    """Whether giving ``vertex`` the next label creates no violation among placed vertices.

    Only violations in which the new, largest label takes part need checking.
    """
    label = {v: p for p, v in enumerate(placed)}
    lower = [v for v in placed if G.has_edge(v, vertex)]
    # below-neighbours of the new top label must form a clique
    for a, u in enumerate(lower):
        for w in lower[a + 1:]:
            if not G.has_edge(u, w):
                return False
    # for i < j < new with {i,j} and {i,new} edges, {j,new} must be an edge
    for u in lower:
        for w in placed:
            if label[w] > label[u] and G.has_edge(u, w) and not G.has_edge(w, vertex):
                return False
    return True


def _search_from(G: Graph, first: int) -> Optional[Tuple[int, ...]]:
    placed = [first]
    remaining = sorted(set(range(1, G.n + 1)) - {first})

    def extend() -> bool:
        if not remaining:
            return True
        for vertex in list(remaining):
            if _extends_cleanly(G, placed, vertex):
                placed.append(vertex)
                remaining.remove(vertex)
                if extend():
                    return True
                placed.pop()
                remaining.append(vertex)
                remaining.sort()
        return False

    return tuple(placed) if extend() else None


def find_closed_labeling(G: Graph, bound: int = DEFAULT_LABELING_BOUND, workers: int = 1) -> Optional[Tuple[int, ...]]:
    """Lexicographically least vertex sequence whose relabeling is closed, or None.

    The result lists the old vertices in the order of their new labels, as
    accepted by :func:`graphs.graph.relabel`.

    Raises:
        GraphError: If the graph has more than ``bound`` vertices
    """
    if G.n > bound:
        raise GraphError(f"Closed-labeling search is limited to {bound} vertices, graph has {G.n}")
    if G.n == 0:
        return ()
    found: List[Tuple[int, ...]] = []
    firsts = list(range(1, G.n + 1))
    if workers > 1 and G.n > 3:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(_search_from, G, first): first for first in firsts}
            for future in as_completed(futures):
                result = future.result()
                if result is not None:
                    found.append(result)
    else:
        for first in firsts:
            result = _search_from(G, first)
            if result is not None:
                found.append(result)
                break
    if not found:
        logger.info(f"No closed labeling exists for {G!r}")
        return None
    best = min(found)
    logger.debug(f"Closed labeling found: {best}")
    return best


def random_relabelings_fail(G: Graph, samples: int = 100, seed: int = 0) -> bool:
    """True when every sampled relabeling of ``G`` is non-closed."""
    rng = random.Random(seed)
    vertices = list(range(1, G.n + 1))
    for _ in range(samples):
        rng.shuffle(vertices)
        if is_closed_labeling(relabel(G, vertices)):
            return False
    return True


__all__ = ['DEFAULT_LABELING_BOUND', 'find_closed_labeling', 'random_relabelings_fail']
