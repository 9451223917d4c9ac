"""Exact linear algebra: ranks, kernels, spans, characteristic polynomials and
rational spectra."""
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt, lcm

from ..errors import NonRationalSpectrum
from ..kernels import echelon_int, exact_rank_int
from .matrix import ONE, ZERO, RatMatrix, RatVector
from .mpoly import MPoly


def _int_row(values):
    values = list(values)
    d = reduce(lcm, (v.denominator for v in values), 1)
    return [int(v * d) for v in values]


def rank_kernel(M):
    """Rank and a kernel basis of ``M`` (right kernel, M v = 0).

    The basis is read off the reduced row echelon form: one vector per free
    column, with a 1 in that column.
    """
    rows, pivots = M.rref()
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * M.cols
        v[free] = ONE
        for row, p in zip(rows, pivots):
            v[p] = -row[free]
        basis.append(RatVector(v))
    return len(pivots), basis


def rank(M):
    return exact_rank_int(M.int_rows(), M.cols)


def kernel(M):
    return rank_kernel(M)[1]


def rank_of_vectors(vectors):
    """Rank of a list of equal-length rational vectors (or sequences)."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return exact_rank_int([_int_row(v) for v in vectors], len(vectors[0]))


def span_basis(vectors, ncols=None):
    """A reduced echelon basis (list of RatVector) of the span of ``vectors``."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    ncols = len(vectors[0]) if ncols is None else ncols
    reduced, pivots = echelon_int([_int_row(v) for v in vectors], ncols)
    return [RatVector([Fraction(a, row[p]) for a in row]) for row, p in zip(reduced, pivots)]


def independent_subset(vectors):
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    chosen = []
    basis_rows = []
    pivots = []
    for idx, v in enumerate(vectors):
        row = _int_row(v)
        if not any(row):
            continue
        candidate = basis_rows + [row]
        reduced, piv = echelon_int(candidate, len(row))
        if len(piv) > len(pivots):
            chosen.append(idx)
            basis_rows, pivots = reduced, piv
    return chosen


def in_span(vector, vectors):
    vectors = [list(v) for v in vectors]
    if not vectors:
        return not any(vector)
    return rank_of_vectors(vectors + [list(vector)]) == rank_of_vectors(vectors)


def solve_linear(A, b):
    """One solution x of A x = b, or None when the system is inconsistent."""
    aug = RatMatrix.from_rows([r + [b[k]] for k, r in enumerate(A.row_lists())])
    rows, pivots = aug.rref()
    if pivots and pivots[-1] == A.cols:
        return None
    x = [ZERO] * A.cols
    for row, p in zip(rows, pivots):
        x[p] = row[A.cols]
    return RatVector(x)


# univariate helpers; coefficient lists run from the constant term upward


def _trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def upoly_divmod(f, g):
    f, g = _trim(f), _trim(g)
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    rem = list(f)
    quot = [ZERO] * max(len(f) - len(g) + 1, 0)
    while len(rem) >= len(g) and rem:
        shift = len(rem) - len(g)
        factor = rem[-1] / g[-1]
        quot[shift] = factor
        for k, v in enumerate(g):
            rem[shift + k] -= factor * v
        rem = _trim(rem)
    return _trim(quot), rem


def upoly_gcd(f, g):
    f, g = _trim(f), _trim(g)
    while g:
        f, g = g, upoly_divmod(f, g)[1]
    if not f:
        return []
    lead = f[-1]
    return [v / lead for v in f]


def upoly_derivative(f):
    return [k * f[k] for k in range(1, len(f))]


def upoly_eval(f, x):
    out = ZERO
    for v in reversed(f):
        out = out * x + v
    return out


def charpoly_coeffs(M):
    """Faddeev-LeVerrier; returns monic coefficients, constant term first."""
    if not M.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = M.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    Mk = RatMatrix.zeros(n)
    ident = RatMatrix.identity(n)
    for k in range(1, n + 1):
        Mk = M @ Mk + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(M @ Mk).trace() / k
    return coeffs


def charpoly(M, var="t"):
    coeffs = charpoly_coeffs(M)
    return MPoly((var,), {(k,): v for k, v in enumerate(coeffs)})


def _divisors(m):
    m = abs(m)
    small, large = [], []
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
    return small + large[::-1]


def rational_roots(coeffs):
    """Rational roots with multiplicities and the leftover cofactor."""
    f = _trim(coeffs)
    roots = {}
    while f and not f[0]:
        f = f[1:]
        roots[ZERO] = roots.get(ZERO, 0) + 1
    if len(f) <= 1:
        return roots, f
    ints = _int_row(f)
    g = reduce(gcd, ints)
    ints = [v // g for v in ints]
    candidates = sorted(
        {Fraction(s * p, q) for p in _divisors(ints[0]) for q in _divisors(ints[-1]) for s in (1, -1)}
    )
    for r in candidates:
        while len(f) > 1 and upoly_eval(f, r) == 0:
            f, _ = upoly_divmod(f, [-r, ONE])
            roots[r] = roots.get(r, 0) + 1
    return roots, f


def rational_spectrum(M):
    """Eigenvalues with algebraic multiplicity, sorted by value.

    Raises NonRationalSpectrum when the characteristic polynomial does not
    split over Q.
    """
    roots, rest = rational_roots(charpoly_coeffs(M))
    if len(rest) > 1:
        raise NonRationalSpectrum(f"characteristic polynomial of {M} does not split over Q")
    return sorted(roots.items())


def has_distinct_eigenvalues(M):
    p = charpoly_coeffs(M)
    return len(upoly_gcd(p, upoly_derivative(p))) == 1


def generalized_eigenspace(M, z):
    n = M.rows
    return kernel((M - RatMatrix.identity(n) * z) ** n)


def basis_matrix(vectors):
    """Matrix whose columns are the given vectors."""
    return RatMatrix.from_columns([list(v) for v in vectors])
