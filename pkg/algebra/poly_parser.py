"""Text form of polynomials: ``x1*y2 - x2*y1``, ``3/2*x1^2 + 2x3``."""

import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from errors import ParseError
from algebra.monomial import Monomial
from algebra.polynomial import Polynomial, PolynomialRing

_TOKEN = re.compile(
    r'(?P<space>\s+)'
    r'|(?P<number>\d+(?:/\d+)?)'
    r'|(?P<name>[A-Za-z][A-Za-z0-9_]*)'
    r'|(?P<op>[-+*^])'
)


def _tokenize(text: str, line: int, source: Optional[str]) -> List[Tuple[str, str, int]]:
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if not match:
            raise ParseError(f"Unexpected character {text[position]!r}", line, position + 1, source)
        kind = match.lastgroup
        if kind != 'space':
            tokens.append((kind, match.group(), position + 1))
        position = match.end()
    return tokens


class _TermParser:
    """Recursive-descent parser over a token list for one polynomial."""

    def __init__(self, text: str, ring: PolynomialRing, line: int, source: Optional[str]):
        self.text = text
        self.ring = ring
        self.line = line
        self.source = source
        self.tokens = _tokenize(text, line, source)
        self.position = 0

    def _peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def _error(self, message: str, column: Optional[int] = None) -> ParseError:
        if column is None:
            token = self._peek()
            column = token[2] if token else len(self.text) + 1
        return ParseError(message, self.line, column, self.source)

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise self._error("Empty polynomial")
        terms: Dict[Monomial, Fraction] = {}
        sign = 1
        token = self._peek()
        if token[0] == 'op' and token[1] in '+-':
            sign = -1 if token[1] == '-' else 1
            self.position += 1
        while True:
            coefficient, monomial = self._term()
            terms[monomial] = terms.get(monomial, Fraction(0)) + sign * coefficient
            token = self._peek()
            if token is None:
                break
            if token[0] != 'op' or token[1] not in '+-':
                raise self._error(f"Expected '+' or '-' but found {token[1]!r}")
            sign = -1 if token[1] == '-' else 1
            self.position += 1
        return Polynomial(self.ring, terms)

    def _term(self) -> Tuple[Fraction, Monomial]:
        coefficient = Fraction(1)
        exponents: Dict[int, int] = {}
        token = self._peek()
        if token is None:
            raise self._error("Expected a term")
        if token[0] == 'number':
            coefficient = self._number(token)
            self.position += 1
            token = self._peek()
            if token is not None and token[0] == 'op' and token[1] == '*':
                self.position += 1
                token = self._peek()
                if token is None or token[0] != 'name':
                    raise self._error("Expected a variable after '*'")
            elif token is None or token[0] != 'name':
                return coefficient, Monomial.one()
        elif token[0] != 'name':
            raise self._error(f"Expected a coefficient or variable but found {token[1]!r}")
        while True:
            index, exp = self._factor()
            exponents[index] = exponents.get(index, 0) + exp
            token = self._peek()
            if token is not None and token[0] == 'op' and token[1] == '*':
                self.position += 1
                token = self._peek()
                if token is None or token[0] != 'name':
                    raise self._error("Expected a variable after '*'")
                continue
            if token is not None and token[0] == 'name':
                continue
            return coefficient, Monomial(exponents)

    def _factor(self) -> Tuple[int, int]:
        kind, name, column = self._peek()
        if not self.ring.has_variable(name):
            raise self._error(f"Unknown variable '{name}'{self._juxtaposition_hint(name)}", column)
        self.position += 1
        exp = 1
        token = self._peek()
        if token is not None and token[0] == 'op' and token[1] == '^':
            self.position += 1
            token = self._peek()
            if token is None or token[0] != 'number' or '/' in token[1]:
                raise self._error("Expected a non-negative integer exponent after '^'")
            exp = int(token[1])
            self.position += 1
        return self.ring.index(name), exp

    def _juxtaposition_hint(self, name: str) -> str:
        prefixes = [v for v in self.ring.names if name.startswith(v) and len(v) < len(name)]
        if not prefixes:
            return ""
        head = max(prefixes, key=len)
        return f"; missing '*' between '{head}' and '{name[len(head):]}'?"

    def _number(self, token: Tuple[str, str, int]) -> Fraction:
        numerator, _, denominator = token[1].partition('/')
        if denominator and int(denominator) == 0:
            raise self._error("Zero denominator", token[2])
        return Fraction(int(numerator), int(denominator or 1))


def parse_polynomial(text: str, ring: PolynomialRing, line: int = 1, source: Optional[str] = None) -> Polynomial:
    """Parse one polynomial written over ``ring``.

    Raises:
        ParseError: With the line and column of the offending token
    """
    return _TermParser(text, ring, line, source).parse()


def _format_monomial(monomial: Monomial, ring: PolynomialRing) -> str:
    factors = []
    for index, exp in monomial.items():
        name = ring.names[index]
        factors.append(name if exp == 1 else f"{name}^{exp}")
    return '*'.join(factors)


def _format_coefficient(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_polynomial(poly: Polynomial) -> str:
    """Canonical text: terms by descending degree, then lex in ring variable order."""
    if poly.is_zero():
        return '0'
    ring = poly.ring
    ordered = sorted(poly.items(), key=lambda item: (item[0].degree, item[0].dense(ring.dimension)), reverse=True)
    pieces = []
    for position, (monomial, coefficient) in enumerate(ordered):
        negative = coefficient < 0
        magnitude = -coefficient if negative else coefficient
        if monomial.is_one():
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = _format_monomial(monomial, ring)
        else:
            body = f"{_format_coefficient(magnitude)}*{_format_monomial(monomial, ring)}"
        if position == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return ' '.join(pieces)


__all__ = ['parse_polynomial', 'format_polynomial']
