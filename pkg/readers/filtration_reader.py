"""Reader and writer for filtration files.

A filtration file names its quotient ring, then lists one member per line::

    quotient: nonclosed6.graph     # a graph file (binomial edge ring) or an ideal file
    0                              # zero ideal
    y6
    y6, x6
    m                              # maximal ideal

Members are comma-separated linear forms in the quotient's variables.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from errors import KoszulError, ParseError
from algebra.poly_parser import format_polynomial, parse_polynomial
from edge_ideals.binomial_edge import EdgeRingContext, build_context
from koszul.filtration import Filtration
from koszul.linear_ideal import LinearIdeal, QuotientRing
from readers.base_reader import BaseReader, header_value
from readers.graph_reader import GraphReader
from readers.ideal_reader import IdealReader


@dataclass
class FiltrationFile:
    filtration: Filtration
    quotient_path: Path
    context: Optional[EdgeRingContext] = None
    source: Optional[str] = None


class FiltrationReader(BaseReader):
    header = 'quotient'

    def load_quotient(self, path: Path):
        """Quotient ring described by a graph or ideal file, with the edge context when there is one."""
        if path.suffix == '.graph':
            context = build_context(GraphReader(self.config, self.logger).read(path))
            return context.host, context
        ideal_file = IdealReader(self.config, self.logger).read(path)
        return QuotientRing(ideal_file.ring, ideal_file.ideal, ideal_file.order), None

    def parse(self, text: str, source: Optional[str] = None, base_dir: Optional[Path] = None) -> FiltrationFile:
        (number, header), body = self.split_header(text, source)
        quotient_path = Path(header_value(header, 'quotient', number, source))
        if not quotient_path.is_absolute() and base_dir is not None:
            quotient_path = base_dir / quotient_path
        try:
            host, context = self.load_quotient(quotient_path)
        except (OSError, KoszulError) as e:
            raise ParseError(f"Cannot load quotient '{quotient_path}': {e}", number, 1, source) from e

        filtration = Filtration(host, name=Path(source).stem if source else '')
        for number, line in body:
            if line == '0':
                filtration.add(host.zero_ideal())
                continue
            if line == 'm':
                filtration.add(host.maximal_ideal())
                continue
            forms = [parse_polynomial(token, host.ring, number, source) for token in line.split(',')]
            try:
                filtration.add(LinearIdeal(host, forms))
            except KoszulError as e:
                raise ParseError(str(e), number, 1, source) from e
        self.logger.info(f"Read filtration with {len(filtration)} members over {host.ring!r}")
        return FiltrationFile(filtration, quotient_path, context, source)


def format_filtration(filtration: Filtration, quotient: str) -> str:
    """Inverse of :class:`FiltrationReader`: one member per line, ``0`` for the zero ideal."""
    lines = [f"quotient: {quotient}"]
    for member in filtration.members:
        if member.is_zero():
            lines.append('0')
        else:
            lines.append(', '.join(format_polynomial(form) for form in member.generators))
    return "\n".join(lines) + "\n"


__all__ = ['FiltrationFile', 'FiltrationReader', 'format_filtration']
