"""Rational q,t-Catalan polynomials: paths, statistics, bijections, and
conjecture verification."""

__version__ = "0.1.0"
