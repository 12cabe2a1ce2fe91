"""Reader for graph files: a ``graph n=<n>`` header followed by one ``i j`` edge per line."""

import re
from pathlib import Path
from typing import Optional

from errors import GraphError, ParseError
from graphs.graph import Graph
from readers.base_reader import BaseReader

_HEADER = re.compile(r'^graph\s+n\s*=\s*(\d+)$', re.IGNORECASE)
_EDGE = re.compile(r'^(\d+)\s*[\s,-]\s*(\d+)$')


class GraphReader(BaseReader):
    header = 'graph'

    def parse(self, text: str, source: Optional[str] = None, base_dir: Optional[Path] = None) -> Graph:
        (number, header), body = self.split_header(text, source)
        match = _HEADER.match(header)
        if not match:
            raise ParseError(f"Expected 'graph n=<count>', found '{header}'", number, 1, source)
        n = int(match.group(1))
        edges = []
        for number, line in body:
            edge = _EDGE.match(line)
            if not edge:
                raise ParseError(f"Expected an edge 'i j', found '{line}'", number, 1, source)
            i, j = int(edge.group(1)), int(edge.group(2))
            try:
                Graph(n, [(i, j)])
            except GraphError as e:
                column = edge.start(2) + 1 if 1 <= i <= n else 1
                raise ParseError(str(e), number, column, source) from e
            edges.append((i, j))
        graph = Graph(n, edges)
        self.logger.info(f"Read graph on {n} vertices with {len(graph.edges)} edges")
        return graph


def format_graph(graph: Graph) -> str:
    """Inverse of :class:`GraphReader`."""
    lines = [f"graph n={graph.n}"]
    lines.extend(f"{i} {j}" for i, j in graph.sorted_edges())
    return "\n".join(lines) + "\n"


__all__ = ['GraphReader', 'format_graph']
