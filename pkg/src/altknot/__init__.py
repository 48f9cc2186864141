"""Alternating knots, links and twists as 2-in/2-out plane digraphs.

The package models alternating diagrams as combinatorial maps, computes
their exact integer adjacency-matrix characteristic polynomials, generates
the named diagram families by ribbon surgery, and verifies the families'
Chebyshev-type closed forms.
"""

from . import diagram, families, polynomials, spectra, surgery  # noqa: F401

__version__ = "0.1.0"
