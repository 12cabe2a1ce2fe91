"""Exception hierarchy shared by every package of the toolkit.

Mathematical falsity (a graph that is not closed, a family that is not a Koszul
filtration) is reported as data, never raised. Exceptions signal misuse or
unparseable input.
"""

from typing import Optional


class KoszulToolkitError(Exception):
    """Base exception for toolkit errors."""
    pass


class PolynomialError(KoszulToolkitError):
    """Exception for invalid polynomial arithmetic (zero leading term, inexact division)."""
    pass


class OrderError(PolynomialError):
    """Exception for monomial order misuse or malformed order specs."""
    pass


class GroebnerError(KoszulToolkitError):
    """Exception for Gröbner engine failures."""
    pass


class GroebnerLimitExceeded(GroebnerError):
    """Raised when Buchberger processes more S-pairs than the configured budget."""

    def __init__(self, max_pairs: int):
        self.max_pairs = max_pairs
        super().__init__(f"S-pair budget of {max_pairs} exceeded")


class ParseError(KoszulToolkitError):
    """Exception for text input that does not follow its grammar."""

    def __init__(self, message: str, line: int = 1, column: int = 1, source: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source or '<input>'
        super().__init__(f"{self.source}:{line}:{column}: {message}")


class GraphError(KoszulToolkitError):
    """Exception for invalid graphs or out-of-range vertex queries."""
    pass


class EdgeIdealError(KoszulToolkitError):
    """Exception for binomial edge ideal operations whose hypotheses do not hold."""
    pass


class KoszulError(KoszulToolkitError):
    """Exception for linear ideal and filtration misuse."""
    pass


class LatticeError(KoszulToolkitError):
    """Exception for posets and lattices that violate their axioms or size bounds."""
    pass


__all__ = [
    'KoszulToolkitError',
    'PolynomialError',
    'OrderError',
    'GroebnerError',
    'GroebnerLimitExceeded',
    'ParseError',
    'GraphError',
    'EdgeIdealError',
    'KoszulError',
    'LatticeError',
]
