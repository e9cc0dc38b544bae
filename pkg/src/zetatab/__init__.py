"""Numerical audit of a table of log/atanh integrals against Hurwitz zeta closed forms."""

__version__ = "0.1.0"
