"""Readers for the plain-text input formats (ideals, graphs, posets, lattices, filtrations)."""

import logging
from pathlib import Path
from typing import Union

from .base_reader import BaseReader, header_value, parse_name_list
from .ideal_reader import IdealFile, IdealReader, ImagesFile, ImagesReader
from .graph_reader import GraphReader, format_graph
from .poset_reader import FamilyReader, LatticeReader, PosetReader, format_poset, parse_subset
from .filtration_reader import FiltrationFile, FiltrationReader, format_filtration

logger = logging.getLogger('koszul_toolkit.readers')


class ReaderFactory:
    """Factory for creating readers based on the file suffix."""

    _BY_SUFFIX = {
        '.ideal': IdealReader,
        '.images': ImagesReader,
        '.graph': GraphReader,
        '.poset': PosetReader,
        '.lattice': LatticeReader,
        '.filtration': FiltrationReader,
        '.family': FamilyReader,
    }

    @staticmethod
    def create_reader(path: Union[str, Path], config: dict = None) -> BaseReader:
        """Create the reader for ``path``.

        Raises:
            ValueError: If the suffix is not a known format
        """
        suffix = Path(path).suffix.lower()
        reader_class = ReaderFactory._BY_SUFFIX.get(suffix)
        if reader_class is None:
            known = ', '.join(sorted(ReaderFactory._BY_SUFFIX))
            raise ValueError(f"Unknown input format '{suffix}' for {path}. Expected one of: {known}")
        return reader_class(config, logger)


__all__ = [
    'BaseReader',
    'header_value',
    'parse_name_list',
    'IdealFile',
    'IdealReader',
    'ImagesFile',
    'ImagesReader',
    'GraphReader',
    'format_graph',
    'LatticeReader',
    'PosetReader',
    'format_poset',
    'FamilyReader',
    'parse_subset',
    'FiltrationFile',
    'FiltrationReader',
    'format_filtration',
    'ReaderFactory',
]
