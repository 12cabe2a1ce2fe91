"""Shared line handling for the plain-text input formats."""

import logging
import re
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

from errors import ParseError
from algebra.monomial import expand_name_range


class BaseReader(ABC):
    """Abstract reader: ``#`` comments and blank lines are skipped, the first content line is a header."""

    header: str = ''

    def __init__(self, config: Optional[Dict[str, Any]] = None, logger: Optional[logging.Logger] = None):
        """
        Initialize the reader.

        Args:
            config: Configuration dictionary (bounds are read from it)
            logger: Logger instance (optional, uses the package logger if not provided)
        """
        self.config = config or {}
        self.logger = logger or logging.getLogger('koszul_toolkit.readers')
        self.stats = {'files_read': 0, 'lines_parsed': 0}

    def read(self, path: Union[str, Path]) -> Any:
        """Read and parse ``path``.

        Raises:
            OSError: If the file cannot be read
            ParseError: If the content is malformed
        """
        path = Path(path)
        text = path.read_text(encoding='utf-8')
        self.logger.debug(f"Reading {path}")
        result = self.parse(text, source=str(path), base_dir=path.parent)
        self.stats['files_read'] += 1
        return result

    @abstractmethod
    def parse(self, text: str, source: Optional[str] = None, base_dir: Optional[Path] = None) -> Any:
        """Parse file content already loaded into memory."""
        pass

    def content_lines(self, text: str) -> Iterator[Tuple[int, str]]:
        """Yield ``(line_number, stripped_line)`` for every non-comment, non-blank line."""
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if line:
                self.stats['lines_parsed'] += 1
                yield number, line

    def split_header(self, text: str, source: Optional[str]) -> Tuple[Tuple[int, str], List[Tuple[int, str]]]:
        """Separate the header line from the body.

        Raises:
            ParseError: If the file is empty or the header keyword is wrong
        """
        lines = list(self.content_lines(text))
        if not lines:
            raise ParseError(f"Empty input, expected a '{self.header}' header", 1, 1, source)
        number, header = lines[0]
        if not header.lower().startswith(self.header):
            raise ParseError(f"Expected a '{self.header}' header, found '{header}'", number, 1, source)
        return lines[0], lines[1:]


def parse_name_list(text: str, line: int, column: int, source: Optional[str]) -> List[str]:
    """Expand a comma or space separated list of names and ranges such as ``x1..x3,y1..y3``."""
    names: List[str] = []
    for token in re.split(r'[,\s]+', text.strip()):
        if token:
            names.extend(expand_name_range(token, line, column, source))
    if len(set(names)) != len(names):
        raise ParseError(f"Duplicate names in '{text}'", line, column, source)
    return names


def header_value(header: str, key: str, line: int, source: Optional[str]) -> str:
    """Value after ``key:`` (or ``key=``) in a header line."""
    match = re.match(rf'^\s*{re.escape(key)}\s*[:=]\s*(.*)$', header, re.IGNORECASE)
    if not match:
        raise ParseError(f"Expected '{key}: ...', found '{header}'", line, 1, source)
    return match.group(1).strip()


__all__ = ['BaseReader', 'parse_name_list', 'header_value']
