"""Seeded random draws of exact data.

All randomness in the package flows through a ``random.Random`` instance the
caller seeds; numerators and denominators are bounded so exact arithmetic
stays cheap.
"""
import random
from fractions import Fraction

from .exact import RatMatrix, RatVector

DEFAULT_HEIGHT = 20


def rng(seed):
    return random.Random(seed)


def rational(r, height=DEFAULT_HEIGHT):
    return Fraction(r.randint(-height, height), r.randint(1, height))


def nonzero_rational(r, height=DEFAULT_HEIGHT):
    while True:
        q = rational(r, height)
        if q:
            return q


def rationals(r, n, height=DEFAULT_HEIGHT):
    return [rational(r, height) for _ in range(n)]


def distinct_rationals(r, n, height=DEFAULT_HEIGHT):
    out = []
    while len(out) < n:
        q = rational(r, height)
        if q not in out:
            out.append(q)
    return out


def vector(r, n, height=DEFAULT_HEIGHT):
    return RatVector(rationals(r, n, height))


def matrix(r, rows, cols=None, height=DEFAULT_HEIGHT):
    cols = rows if cols is None else cols
    return RatMatrix(rows, cols, rationals(r, rows * cols, height))


def invertible_matrix(r, n, height=5):
    while True:
        g = RatMatrix(n, n, [Fraction(r.randint(-height, height)) for _ in range(n * n)])
        if g.det():
            return g
