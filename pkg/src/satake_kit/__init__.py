"""Exact algebra behind the complex and quaternionic geometric Satake pictures for GL_n.

Kostka-Foulkes polynomials, Brylinski-Kostant filtrations, IC-stalk tables,
equivariant cohomology of projective spaces, regular centralizers and the
branching data of the spectral side, all over the rationals.
"""

__version__ = "0.1.0"
