"""Skew polynomial rings of bijective type, term-spanned subextensions,
finite module lattices, and a verification CLI over all of it."""

__version__ = "0.1.0"
