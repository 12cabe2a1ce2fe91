"""Reader for ideal files and monomial-image files.

Ideal file::

    ring: x1..x3
    order: revlex:x1>x2>x3      # optional, defaults to revlex in ring order
    x1*x3 - x2*x3

Image file (for toric kernels)::

    target: t1..t5
    source: x1..x10             # optional, defaults to x1..xk
    t1*t2
"""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from errors import ParseError, PolynomialError
from algebra.ideals import IdealHandle
from algebra.orders import MonomialOrder, parse_order_spec
from algebra.poly_parser import parse_polynomial
from algebra.polynomial import Polynomial, PolynomialRing
from readers.base_reader import BaseReader, header_value, parse_name_list


@dataclass
class IdealFile:
    ring: PolynomialRing
    ideal: IdealHandle
    order: MonomialOrder
    source: Optional[str] = None


@dataclass
class ImagesFile:
    target: PolynomialRing
    images: List[Polynomial]
    source_names: Optional[Sequence[str]] = None
    source: Optional[str] = None


class IdealReader(BaseReader):
    header = 'ring'

    def parse(self, text: str, source: Optional[str] = None, base_dir: Optional[Path] = None) -> IdealFile:
        (number, header), body = self.split_header(text, source)
        value = header_value(header, 'ring', number, source)
        ring = PolynomialRing(parse_name_list(value, number, header.index(value) + 1, source))
        order = ring.default_order()
        if body and body[0][1].lower().startswith('order'):
            order_line, order_text = body.pop(0)
            try:
                order = parse_order_spec(header_value(order_text, 'order', order_line, source), ring)
            except PolynomialError as e:
                raise ParseError(str(e), order_line, 1, source) from e
        generators = [parse_polynomial(line, ring, number, source) for number, line in body]
        self.logger.info(f"Read {len(generators)} generators in {ring.dimension} variables")
        return IdealFile(ring, IdealHandle(ring, generators), order, source)


class ImagesReader(BaseReader):
    header = 'target'

    def parse(self, text: str, source: Optional[str] = None, base_dir: Optional[Path] = None) -> ImagesFile:
        (number, header), body = self.split_header(text, source)
        value = header_value(header, 'target', number, source)
        target = PolynomialRing(parse_name_list(value, number, header.index(value) + 1, source))
        source_names = None
        if body and body[0][1].lower().startswith('source'):
            names_line, names_text = body.pop(0)
            source_names = parse_name_list(header_value(names_text, 'source', names_line, source),
                                           names_line, 1, source)
        images = []
        for number, line in body:
            image = parse_polynomial(line, target, number, source)
            if len(image) != 1:
                raise ParseError(f"Image '{line}' is not a monomial", number, 1, source)
            images.append(image)
        if source_names is not None and len(source_names) != len(images):
            raise ParseError(f"{len(source_names)} source names for {len(images)} images", 1, 1, source)
        return ImagesFile(target, images, source_names, source)


__all__ = ['IdealFile', 'ImagesFile', 'IdealReader', 'ImagesReader']
