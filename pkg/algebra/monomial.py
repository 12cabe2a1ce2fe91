"""Variables and sparse monomials over an ordered variable list."""

import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from errors import ParseError, PolynomialError

VARIABLE_NAME = re.compile(r'[A-Za-z][A-Za-z0-9_]*')
_NAME_RANGE = re.compile(r'^([A-Za-z][A-Za-z_]*)(\d+)\.\.([A-Za-z][A-Za-z_]*)(\d+)$')


@dataclass(frozen=True)
class Variable:
    """A ring variable: its 0-based position and display name."""

    index: int
    name: str

    def __str__(self) -> str:
        return self.name


class Monomial:
    """Power product stored as a sparse, sorted tuple of (variable index, exponent) pairs."""

    __slots__ = ('_items', '_map', 'degree', '_hash')

    def __init__(self, exponents: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = ()):
        pairs = exponents.items() if isinstance(exponents, Mapping) else exponents
        cleaned: Dict[int, int] = {}
        for index, exp in pairs:
            if exp < 0:
                raise PolynomialError(f"Negative exponent {exp} for variable index {index}")
            if exp:
                cleaned[index] = cleaned.get(index, 0) + exp
        self._items: Tuple[Tuple[int, int], ...] = tuple(sorted(cleaned.items()))
        self._map = dict(self._items)
        self.degree = sum(cleaned.values())
        self._hash = hash(self._items)

    @classmethod
    def one(cls) -> 'Monomial':
        return cls()

    @classmethod
    def variable(cls, index: int, exponent: int = 1) -> 'Monomial':
        return cls({index: exponent})

    @classmethod
    def from_dense(cls, exponents: Iterable[int]) -> 'Monomial':
        return cls(enumerate(exponents))

    def exponent(self, index: int) -> int:
        return self._map.get(index, 0)

    def items(self) -> Tuple[Tuple[int, int], ...]:
        return self._items

    def support(self) -> Tuple[int, ...]:
        return tuple(index for index, _ in self._items)

    @property
    def max_index(self) -> int:
        """Largest variable index present, -1 for the unit monomial."""
        return self._items[-1][0] if self._items else -1

    def is_one(self) -> bool:
        return not self._items

    def dense(self, dimension: int) -> Tuple[int, ...]:
        return tuple(self._map.get(i, 0) for i in range(dimension))

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        merged = dict(self._map)
        for index, exp in other._items:
            merged[index] = merged.get(index, 0) + exp
        return Monomial(merged)

    def divides(self, other: 'Monomial') -> bool:
        if self.degree > other.degree:
            return False
        other_map = other._map
        for index, exp in self._items:
            if other_map.get(index, 0) < exp:
                return False
        return True

    def __truediv__(self, other: 'Monomial') -> 'Monomial':
        if not other.divides(self):
            raise PolynomialError(f"{other!r} does not divide {self!r}")
        quotient = dict(self._map)
        for index, exp in other._items:
            quotient[index] -= exp
        return Monomial(quotient)

    def lcm(self, other: 'Monomial') -> 'Monomial':
        merged = dict(self._map)
        for index, exp in other._items:
            if merged.get(index, 0) < exp:
                merged[index] = exp
        return Monomial(merged)

    def gcd(self, other: 'Monomial') -> 'Monomial':
        return Monomial({i: min(e, other.exponent(i)) for i, e in self._items if other.exponent(i)})

    def is_coprime(self, other: 'Monomial') -> bool:
        other_map = other._map
        return not any(index in other_map for index, _ in self._items)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({dict(self._items)})"


def expand_name_range(token: str, line: int = 1, column: int = 1, source: Optional[str] = None) -> List[str]:
    """Expand a variable token such as ``x1..x4`` (or ``y3..y1``) into names.

    Plain names are returned unchanged.

    Raises:
        ParseError: If the token is neither a name nor a well-formed range
    """
    token = token.strip()
    match = _NAME_RANGE.match(token)
    if match:
        prefix, start, other_prefix, stop = match.groups()
        if prefix != other_prefix:
            raise ParseError(f"Range '{token}' mixes prefixes '{prefix}' and '{other_prefix}'", line, column, source)
        first, last = int(start), int(stop)
        step = 1 if last >= first else -1
        return [f"{prefix}{k}" for k in range(first, last + step, step)]
    if not VARIABLE_NAME.fullmatch(token):
        raise ParseError(f"Invalid variable name '{token}'", line, column, source)
    return [token]


__all__ = ['Variable', 'Monomial', 'VARIABLE_NAME', 'expand_name_range']
