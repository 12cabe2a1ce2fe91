"""Readers for poset and explicit lattice files.

Poset file::

    poset
    elements: a b c      # optional, needed for isolated elements
    a < b
    a < c

Lattice file: same body under a ``lattice`` header; the cover relations are
validated as a distributive lattice on load.
"""

import re
from pathlib import Path
from typing import FrozenSet, List, Optional, Tuple

from errors import LatticeError, ParseError
from lattices.lattice import DistributiveLattice
from lattices.poset import Poset
from readers.base_reader import BaseReader, header_value, parse_name_list

_RELATION = re.compile(r'^([A-Za-z][A-Za-z0-9_]*)\s*<\s*([A-Za-z][A-Za-z0-9_]*)$')


class PosetReader(BaseReader):
    header = 'poset'

    def _elements_and_relations(self, body, source) -> Tuple[List[str], List[Tuple[str, str]]]:
        elements: List[str] = []
        relations: List[Tuple[str, str]] = []
        for number, line in body:
            if line.lower().startswith('elements'):
                for name in parse_name_list(header_value(line, 'elements', number, source), number, 1, source):
                    if name not in elements:
                        elements.append(name)
                continue
            match = _RELATION.match(line)
            if not match:
                raise ParseError(f"Expected 'a < b', found '{line}'", number, 1, source)
            relations.append((match.group(1), match.group(2)))
            for name in match.groups():
                if name not in elements:
                    elements.append(name)
        return elements, relations

    def parse(self, text: str, source: Optional[str] = None, base_dir: Optional[Path] = None) -> Poset:
        (number, _), body = self.split_header(text, source)
        elements, relations = self._elements_and_relations(body, source)
        try:
            return Poset(elements, relations)
        except LatticeError as e:
            raise ParseError(str(e), number, 1, source) from e


class LatticeReader(PosetReader):
    header = 'lattice'

    def parse(self, text: str, source: Optional[str] = None, base_dir: Optional[Path] = None) -> DistributiveLattice:
        (number, _), body = self.split_header(text, source)
        elements, relations = self._elements_and_relations(body, source)
        bound = self.config.get('lattice', {}).get('lattice_bound', 16)
        try:
            return DistributiveLattice.from_covers(elements, relations, bound=bound)
        except LatticeError as e:
            raise ParseError(str(e), number, 1, source) from e


class FamilyReader(BaseReader):
    """Family of element subsets: a ``family`` header, then one comma-separated subset per line, ``{}`` for the empty set."""

    header = 'family'

    def parse(self, text: str, source: Optional[str] = None, base_dir: Optional[Path] = None) -> List[FrozenSet[str]]:
        _, body = self.split_header(text, source)
        return [parse_subset(line, number, source) for number, line in body]


def parse_subset(text: str, line: int = 1, source: Optional[str] = None) -> FrozenSet[str]:
    """``a,b,c`` or ``{a, b}``; ``{}`` and the empty string give the empty set."""
    text = text.strip()
    if text.startswith('{') and text.endswith('}'):
        text = text[1:-1]
    if not text.strip():
        return frozenset()
    return frozenset(parse_name_list(text, line, 1, source))


def format_poset(poset: Poset) -> str:
    lines = ["poset", f"elements: {' '.join(poset.elements)}"]
    lines.extend(f"{a} < {b}" for a, b in poset.covers())
    return "\n".join(lines) + "\n"


__all__ = ['PosetReader', 'LatticeReader', 'FamilyReader', 'parse_subset', 'format_poset']
