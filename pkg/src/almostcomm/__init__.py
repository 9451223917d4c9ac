"""Exact experiments on the almost-commuting variety [X,Y] + ij = 0.

Subpackages: ``exact`` (rational linear algebra and polynomials), ``acv``
(points, normal forms, strata), ``quiver`` (root combinatorics),
``cherednik`` (rational Cherednik algebra of gl_n), ``altpoly`` (alternating
polynomials and freeness certificates), ``cli``.
"""
__version__ = "0.1.0"
