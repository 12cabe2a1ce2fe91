"""Koszul toolkit

Exact Gröbner bases over the rationals, colon ideals, closed-graph
recognition, and certified Koszul filtrations for binomial edge rings and
Hibi rings of distributive lattices.

Basic Usage:
    1. Optionally copy config.example.yaml to config.yaml
    2. Run: python koszulcheck.py bei data/path3.graph --filtration --certify
    3. Add --json for machine-readable reports

Example Configuration (config.yaml):
    groebner:
        max_pairs: ${KOSZUL_GB_LIMIT}
    koszul:
        workers: 4
"""

__version__ = "1.0.0"
__description__ = "Gröbner bases and Koszul filtration certificates"

__all__ = [
    '__version__',
    '__description__',
]
