"""Finite simple graphs on the vertex set 1..n."""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from errors import GraphError

logger = logging.getLogger('koszul_toolkit.graphs')

Edge = Tuple[int, int]


class Graph:
    """Simple graph with vertices ``1..n``; edges are stored as pairs ``(i, j)`` with ``i < j``."""

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"Vertex count must be non-negative, got {n}")
        self.n = n
        normalized = set()
        for edge in edges:
            i, j = edge
            if i == j:
                raise GraphError(f"Loop at vertex {i}")
            for v in (i, j):
                if not 1 <= v <= n:
                    raise GraphError(f"Vertex {v} outside 1..{n}")
            normalized.add((min(i, j), max(i, j)))
        self.edges: FrozenSet[Edge] = frozenset(normalized)
        self._neighbors = {v: set() for v in range(1, n + 1)}
        for i, j in self.edges:
            self._neighbors[i].add(j)
            self._neighbors[j].add(i)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, v: int) -> FrozenSet[int]:
        self._check_vertex(v)
        return frozenset(self._neighbors[v])

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise GraphError(f"Vertex {v} outside 1..{self.n}")

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class NeighborIntervals:
    """Neighbours of ``k`` below and above it, with the interval bounds used by the filtration."""

    vertex: int
    below: FrozenSet[int]
    above: FrozenSet[int]
    ell: Optional[int]
    i_next: Optional[int]
    below_is_interval: bool
    above_is_interval: bool


@dataclass(frozen=True)
class ClosednessCheck:
    closed: bool
    witness: Optional[Tuple[int, int, int]] = None

    def __bool__(self) -> bool:
        return self.closed


def _is_interval(values: FrozenSet[int]) -> bool:
    return not values or max(values) - min(values) + 1 == len(values)


def is_closed_labeling(G: Graph) -> ClosednessCheck:
    """Check closedness for the current labeling.

    On failure the witness ``(i, j, k)`` has edges ``{i,j}`` and ``{i,k}`` on
    the same side of ``i`` with ``{j,k}`` missing; ``i`` is the smallest such vertex.
    """
    for i in range(1, G.n + 1):
        neighbors = G._neighbors[i]
        for side in (sorted(v for v in neighbors if v > i), sorted(v for v in neighbors if v < i)):
            for a, j in enumerate(side):
                for k in side[a + 1:]:
                    if not G.has_edge(j, k):
                        return ClosednessCheck(False, (i, j, k))
    return ClosednessCheck(True)


def neighbor_intervals(G: Graph, k: int) -> NeighborIntervals:
    """``N^<(k)``, ``N^>(k)``, ``ell_k = max N^>(k)`` and ``i_k = min N^<(k+1)``.

    Raises:
        GraphError: If ``k`` is not a vertex
    """
    G._check_vertex(k)
    below = frozenset(v for v in G._neighbors[k] if v < k)
    above = frozenset(v for v in G._neighbors[k] if v > k)
    next_below = frozenset(v for v in G._neighbors[k + 1] if v < k + 1) if k < G.n else frozenset()
    return NeighborIntervals(
        vertex=k,
        below=below,
        above=above,
        ell=max(above) if above else None,
        i_next=min(next_below) if next_below else None,
        below_is_interval=_is_interval(below),
        above_is_interval=_is_interval(above),
    )


def is_complete(G: Graph) -> bool:
    return len(G.edges) == G.n * (G.n - 1) // 2


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    return nx.is_connected(G.to_networkx())


def maximal_cliques(G: Graph) -> List[Tuple[int, ...]]:
    return sorted(tuple(sorted(clique)) for clique in nx.find_cliques(G.to_networkx()))


def relabel(G: Graph, sequence: Sequence[int]) -> Graph:
    """Graph in which vertex ``sequence[p]`` receives the label ``p + 1``.

    Raises:
        GraphError: If ``sequence`` is not a permutation of the vertices
    """
    if sorted(sequence) != list(range(1, G.n + 1)):
        raise GraphError(f"{list(sequence)} is not a permutation of 1..{G.n}")
    label = {vertex: position + 1 for position, vertex in enumerate(sequence)}
    return Graph(G.n, [(label[i], label[j]) for i, j in G.edges])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def star_graph(k: int) -> Graph:
    """Centre 1 joined to the leaves ``2..k+1``."""
    return Graph(k + 1, [(1, leaf) for leaf in range(2, k + 2)])


def from_networkx(graph: nx.Graph) -> Graph:
    """Relabel the nodes of a networkx graph to ``1..n`` in sorted node order."""
    nodes = sorted(graph.nodes())
    index = {node: position + 1 for position, node in enumerate(nodes)}
    return Graph(len(nodes), [(index[u], index[v]) for u, v in graph.edges() if u != v])


__all__ = [
    'Graph',
    'NeighborIntervals',
    'ClosednessCheck',
    'is_closed_labeling',
    'neighbor_intervals',
    'is_complete',
    'is_connected',
    'maximal_cliques',
    'relabel',
    'complete_graph',
    'path_graph',
    'star_graph',
    'from_networkx',
]
