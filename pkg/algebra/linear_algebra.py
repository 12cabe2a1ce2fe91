"""Exact rational linear algebra on coefficient rows, backed by sympy matrices."""

from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy as sp

Row = Tuple[Fraction, ...]


def _to_matrix(rows: Sequence[Sequence[Fraction]], width: int) -> sp.Matrix:
    if not rows:
        return sp.zeros(0, width)
    return sp.Matrix([[sp.Rational(v.numerator, v.denominator) for v in row] for row in rows])


def _to_fraction(value) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def rank(rows: Sequence[Sequence[Fraction]], width: int) -> int:
    if not rows:
        return 0
    return _to_matrix(rows, width).rank()


def row_space_basis(rows: Sequence[Sequence[Fraction]], width: int) -> List[Row]:
    """Nonzero rows of the reduced row echelon form; canonical for the span."""
    if not rows:
        return []
    reduced, pivots = _to_matrix(rows, width).rref()
    return [tuple(_to_fraction(reduced[r, c]) for c in range(width)) for r in range(len(pivots))]


def nullspace(rows: Sequence[Sequence[Fraction]], width: int) -> List[Row]:
    """Basis of ``{v : rows * v = 0}``, returned in reduced echelon form."""
    if not rows:
        basis = [tuple(Fraction(int(i == j)) for j in range(width)) for i in range(width)]
        return basis
    vectors = _to_matrix(rows, width).nullspace()
    raw = [tuple(_to_fraction(v[i]) for i in range(width)) for v in vectors]
    return row_space_basis(raw, width)


__all__ = ['rank', 'row_space_basis', 'nullspace']
