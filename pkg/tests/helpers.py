"""Small builders shared by the test modules."""

from pathlib import Path

from algebra.ideals import IdealHandle
from algebra.poly_parser import parse_polynomial
from algebra.polynomial import PolynomialRing
from graphs.graph import Graph

DATA_DIR = Path(__file__).resolve().parent.parent / 'data'

NONCLOSED6_EDGES = [(1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (3, 6)]


def ring(*names):
    return PolynomialRing(list(names))


def poly(r, text):
    return parse_polynomial(text, r)


def ideal(r, *texts):
    return IdealHandle(r, [parse_polynomial(t, r) for t in texts])


def nonclosed6():
    return Graph(6, NONCLOSED6_EDGES)


def data_file(name):
    return str(DATA_DIR / name)
