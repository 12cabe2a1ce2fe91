"""Monomial orders: lex and revlex over a variable priority, and elimination block orders."""

import re
import threading
from dataclasses import dataclass, field
from enum import IntEnum
from typing import TYPE_CHECKING, Any, Dict, Sequence, Tuple

from errors import OrderError
from algebra.monomial import Monomial, expand_name_range

if TYPE_CHECKING:
    from algebra.polynomial import PolynomialRing

_ELIM_SPEC = re.compile(r'^elim:\{([^}]*)\}:then:(.+)$')

KEY_CACHE_LIMIT = 1 << 16


class Comparison(IntEnum):
    """Result of comparing two monomials."""
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class MonomialOrder:
    """Total, multiplicative order on the monomials of a ring.

    ``priority`` lists variable indices from largest to smallest. A ``block``
    order compares its component orders one after another, so the variables of
    the first block are eliminated.
    """

    kind: str
    priority: Tuple[int, ...]
    dimension: int
    blocks: Tuple['MonomialOrder', ...] = ()
    names: Tuple[str, ...] = field(default=(), compare=False)
    _keys: Dict[Monomial, Any] = field(default_factory=dict, compare=False, hash=False, repr=False)
    _keys_lock: threading.Lock = field(default_factory=threading.Lock, compare=False, hash=False, repr=False)

    @classmethod
    def revlex(cls, ring: 'PolynomialRing', priority: Sequence[str]) -> 'MonomialOrder':
        """Reverse lexicographic order induced by ``priority[0] > priority[1] > ...``."""
        return cls._component('revlex', ring, priority, full=True)

    @classmethod
    def lex(cls, ring: 'PolynomialRing', priority: Sequence[str]) -> 'MonomialOrder':
        """Lexicographic order induced by ``priority[0] > priority[1] > ...``."""
        return cls._component('lex', ring, priority, full=True)

    @classmethod
    def elimination(cls, ring: 'PolynomialRing', block: Sequence[str], rest: 'MonomialOrder' = None) -> 'MonomialOrder':
        """Block order eliminating ``block``; the remaining variables follow ``rest``.

        Both blocks default to revlex in ring order.
        """
        block_names = [name for name in ring.names if name in set(block)]
        unknown = set(block) - set(ring.names)
        if unknown:
            raise OrderError(f"Unknown variables in elimination block: {sorted(unknown)}")
        remaining = [name for name in ring.names if name not in set(block)]
        if rest is None:
            rest_component = cls._component('revlex', ring, remaining, full=False)
        else:
            if rest.kind == 'block' or {ring.names[i] for i in rest.priority} != set(remaining):
                raise OrderError("Order after an elimination block must cover exactly the remaining variables")
            rest_component = rest
        first = cls._component('revlex', ring, block_names, full=False)
        return cls(
            kind='block',
            priority=first.priority + rest_component.priority,
            dimension=ring.dimension,
            blocks=(first, rest_component),
            names=first.names + rest_component.names,
        )

    @classmethod
    def _component(cls, kind: str, ring: 'PolynomialRing', priority: Sequence[str], full: bool) -> 'MonomialOrder':
        indices = tuple(ring.index(name) for name in priority)
        if len(set(indices)) != len(indices):
            raise OrderError(f"Variable listed twice in {kind} priority: {list(priority)}")
        if full and len(indices) != ring.dimension:
            raise OrderError(
                f"{kind} priority lists {len(indices)} variables but the ring has {ring.dimension}"
            )
        return cls(kind=kind, priority=indices, dimension=ring.dimension, names=tuple(priority))

    def key(self, monomial: Monomial) -> Any:
        """Sort key: larger key means larger monomial.

        Keys are cached per order; the cache is emptied once it holds
        ``KEY_CACHE_LIMIT`` monomials.
        """
        with self._keys_lock:
            cached = self._keys.get(monomial)
        if cached is None:
            cached = self._compute_key(monomial)
            with self._keys_lock:
                if len(self._keys) >= KEY_CACHE_LIMIT:
                    self._keys.clear()
                self._keys[monomial] = cached
        return cached

    def _compute_key(self, monomial: Monomial) -> Any:
        if self.kind == 'lex':
            return tuple(monomial.exponent(i) for i in self.priority)
        if self.kind == 'revlex':
            exps = [monomial.exponent(i) for i in self.priority]
            return (sum(exps), tuple(-e for e in reversed(exps)))
        return tuple(block._compute_key(monomial) for block in self.blocks)

    def least_variable(self) -> int:
        return self.priority[-1]

    def is_revlex_with_last(self, index: int) -> bool:
        return self.kind == 'revlex' and self.priority[-1] == index

    def spec(self) -> str:
        """Text form accepted by :func:`parse_order_spec`."""
        if self.kind == 'block':
            first, rest = self.blocks
            return f"elim:{{{','.join(first.names)}}}:then:{rest.spec()}"
        return f"{self.kind}:{'>'.join(self.names)}"

    def __str__(self) -> str:
        return self.spec()


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> Comparison:
    """Compare two monomials under ``order``.

    Raises:
        OrderError: If either monomial uses a variable outside the order's ring
    """
    if m1.max_index >= order.dimension or m2.max_index >= order.dimension:
        raise OrderError(f"Monomial outside a ring of dimension {order.dimension}")
    k1, k2 = order.key(m1), order.key(m2)
    if k1 == k2:
        return Comparison.EQUAL
    return Comparison.GREATER if k1 > k2 else Comparison.LESS


def parse_order_spec(text: str, ring: 'PolynomialRing') -> MonomialOrder:
    """Parse ``revlex:y1>y2>x1``, ``lex:x1..x3>y1..y3`` or ``elim:{t}:then:revlex:...``.

    Raises:
        OrderError: If the spec is malformed or does not match the ring
    """
    text = text.strip()
    match = _ELIM_SPEC.match(text)
    if match:
        block = [name.strip() for name in match.group(1).split(',') if name.strip()]
        rest_text = match.group(2)
        remaining = [name for name in ring.names if name not in set(block)]
        rest_kind, rest_names = _split_component(rest_text)
        rest = MonomialOrder._component(rest_kind, ring, rest_names, full=False)
        if set(rest_names) != set(remaining):
            raise OrderError(f"'{rest_text}' must list exactly the variables outside the block")
        return MonomialOrder.elimination(ring, block, rest)
    kind, names = _split_component(text)
    return MonomialOrder._component(kind, ring, names, full=True)


def _split_component(text: str) -> Tuple[str, list]:
    kind, sep, body = text.partition(':')
    if not sep or kind not in ('lex', 'revlex'):
        raise OrderError(f"Order spec must start with 'lex:', 'revlex:' or 'elim:': {text!r}")
    names = []
    for token in body.split('>'):
        try:
            names.extend(expand_name_range(token))
        except Exception as e:
            raise OrderError(f"Bad variable token in order spec {text!r}: {e}")
    return kind, names


__all__ = ['Comparison', 'MonomialOrder', 'compare', 'parse_order_spec']
