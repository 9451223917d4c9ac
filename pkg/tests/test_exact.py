import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from almostcomm import kernels
from almostcomm.errors import NonRationalSpectrum, NotDivisible
from almostcomm.exact import (
    CPoly,
    MPoly,
    RatMatrix,
    RatVector,
    charpoly,
    has_distinct_eigenvalues,
    poly_exact_divide,
    rank_kernel,
    rational_spectrum,
)
from almostcomm.exact import perm
from almostcomm.exact.mpoly import xvars
from almostcomm.kernels import _pykernels

T = ("t",)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def tpoly(coeffs):
    return MPoly(T, {(k,): v for k, v in enumerate(coeffs)})


# rank and kernel


def test_rank_kernel_identity():
    r, K = rank_kernel(RatMatrix.identity(3))
    assert r == 3 and K == []


def test_rank_kernel_zero():
    r, K = rank_kernel(RatMatrix.zeros(2, 3))
    assert r == 0 and len(K) == 3


def test_rank_kernel_by_hand():
    M = RatMatrix.from_rows([[1, 2], [2, 4]])
    r, K = rank_kernel(M)
    assert r == 1 and len(K) == 1
    v = K[0]
    assert v[0] == -2 * v[1]


@st.composite
def matrices(draw, max_dim=5):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    # small integer entries make rank deficiency likely
    vals = draw(st.lists(st.integers(-2, 2), min_size=rows * cols, max_size=rows * cols))
    return RatMatrix(rows, cols, vals)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_plus_nullity(M):
    r, K = rank_kernel(M)
    assert r + len(K) == M.cols
    for v in K:
        assert (M @ v).is_zero()
    if K:
        assert rank_kernel(RatMatrix.from_columns([list(v) for v in K]))[0] == len(K)


@settings(max_examples=50, deadline=None)
@given(matrices(), st.data())
def test_rank_kernel_invariant_under_row_scaling(M, data):
    row = data.draw(st.integers(0, M.rows - 1))
    s = data.draw(rationals.filter(bool))
    rows = M.row_lists()
    rows[row] = [s * v for v in rows[row]]
    r1, K1 = rank_kernel(M)
    r2, K2 = rank_kernel(RatMatrix.from_rows(rows))
    assert r1 == r2
    assert K1 == K2  # reduced echelon form is canonical


@settings(max_examples=60, deadline=None)
@given(matrices(6))
def test_compiled_and_pure_kernels_agree(M):
    rows = M.int_rows()
    assert kernels.echelon_int(rows, M.cols) == _pykernels.echelon_int(rows, M.cols)
    assert kernels.rank_mod_p(rows, M.cols) == _pykernels.rank_mod_p(rows, M.cols)


def test_modular_rank_is_exact_fallback():
    # rank drops mod p but not over Q
    p = kernels.DEFAULT_PRIME
    rows = [[p, 0], [0, 1]]
    assert kernels.rank_mod_p(rows, 2) == 1
    assert kernels.exact_rank_int(rows, 2) == 2


# characteristic polynomial and spectrum


def test_charpoly_examples():
    assert charpoly(RatMatrix.diag([0, 1])) == tpoly([0, -1, 1])
    J = RatMatrix.from_rows([[3, 1], [0, 3]])
    assert charpoly(J) == tpoly([9, -6, 1])
    assert charpoly(RatMatrix.from_rows([[0, 1], [-1, 0]])) == tpoly([1, 0, 1])


def test_charpoly_rejects_non_square():
    with pytest.raises(ValueError):
        charpoly(RatMatrix.zeros(2, 3))


def test_rational_spectrum_examples():
    assert rational_spectrum(RatMatrix.diag([1, 1, 5])) == [(1, 2), (5, 1)]
    with pytest.raises(NonRationalSpectrum):
        rational_spectrum(RatMatrix.from_rows([[0, 1], [-1, 0]]))
    companion = RatMatrix.from_rows([[0, -6], [1, 5]])
    assert rational_spectrum(companion) == [(2, 1), (3, 1)]


def test_distinct_eigenvalue_examples():
    assert has_distinct_eigenvalues(RatMatrix.diag([0, 1, 2]))
    assert not has_distinct_eigenvalues(RatMatrix.from_rows([[0, 1], [0, 0]]))
    assert has_distinct_eigenvalues(RatMatrix.from_rows([[0, 1], [-1, 0]]))


@st.composite
def split_matrices(draw):
    """g T g^-1 with T upper triangular, so the spectrum is the diagonal of T."""
    n = draw(st.integers(1, 6))
    diag = draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    upper = draw(st.lists(st.integers(-2, 2), min_size=n * n, max_size=n * n))
    T = RatMatrix(n, n, [diag[r] if r == c else (upper[r * n + c] if c > r else 0) for r in range(n) for c in range(n)])
    g = RatMatrix.identity(n)
    for k in range(n - 1):
        g = g @ (RatMatrix.identity(n) + RatMatrix.unit(n, k + 1, k) * draw(st.integers(-2, 2)))
    return g @ T @ g.inverse(), diag


@settings(max_examples=60, deadline=None)
@given(split_matrices())
def test_spectrum_reassembles_charpoly(data):
    M, diag = data
    spectrum = rational_spectrum(M)
    assert sum(m for _, m in spectrum) == M.rows
    assert sorted(z for z, m in spectrum for _ in range(m)) == sorted(diag)
    product = tpoly([1])
    for z, m in spectrum:
        product = product * tpoly([-z, 1]) ** m
    assert product == charpoly(M)


@settings(max_examples=40, deadline=None)
@given(split_matrices(), st.data())
def test_distinctness_is_conjugation_invariant(data, draw):
    M, _ = data
    n = M.rows
    vals = draw.draw(st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n))
    g = RatMatrix(n, n, vals)
    if not g.det():
        g = RatMatrix.identity(n)
    assert has_distinct_eigenvalues(M) == has_distinct_eigenvalues(g @ M @ g.inverse())


# polynomials

X2 = xvars(2)


def test_exact_division_examples():
    x1, x2 = MPoly.var(X2, 0), MPoly.var(X2, 1)
    assert poly_exact_divide(x1**2 - x2**2, x1 - x2) == x1 + x2
    f = x1**3 + x2 * 7
    assert poly_exact_divide(f, MPoly.constant(X2, 1)) == f
    assert poly_exact_divide(x1**3 - x2**3, x1 - x2) == x1**2 + x1 * x2 + x2**2
    with pytest.raises(NotDivisible):
        poly_exact_divide(x1**2 + x2, x1 - x2)


@st.composite
def sparse_polys(draw, vars=X2, max_terms=4, max_exp=3):
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(0, max_exp) for _ in vars]), rationals.filter(bool), min_size=1, max_size=max_terms
        )
    )
    return MPoly(vars, terms)


@settings(max_examples=80, deadline=None)
@given(sparse_polys(), sparse_polys())
def test_divide_product_recovers_factor(f, g):
    assert poly_exact_divide(f * g, g) == f


def test_c_coefficients_divide_exactly():
    c = CPoly.c()
    x1, x2 = MPoly.var(X2, 0), MPoly.var(X2, 1)
    f = (x1 - x2) * (x1.scale(c) + x2.scale(1 - c))
    assert poly_exact_divide(f, x1 - x2) == x1.scale(c) + x2.scale(1 - c)


def test_cpoly_string_round_trip():
    c = CPoly.c()
    for p in (CPoly(), CPoly.const(3), 1 - c, c**3 * Fraction(2, 7) - 5):
        assert CPoly.parse(str(p)) == p


def test_matrix_json_round_trip():
    M = RatMatrix.from_rows([[Fraction(1, 3), 2], [-5, Fraction(7, 4)]])
    data = json.loads(json.dumps(M.to_json()))
    assert RatMatrix.from_json(data) == M
    assert data == [["1/3", "2/1"], ["-5/1", "7/4"]]
    v = RatVector([Fraction(-1, 2), 3])
    assert RatVector.from_json(json.loads(json.dumps(v.to_json()))) == v


@settings(max_examples=40, deadline=None)
@given(sparse_polys())
def test_poly_json_round_trip(f):
    g = MPoly.from_json(json.loads(json.dumps(f.to_json())))
    assert g == f
    assert json.dumps(g.to_json()) == json.dumps(f.to_json())


def test_c_poly_json_round_trip():
    c = CPoly.c()
    f = MPoly(X2, {(1, 0): 1 - c, (0, 2): c * c})
    assert MPoly.from_json(json.loads(json.dumps(f.to_json()))) == f


# permutations


def test_permutation_conventions():
    w, v = (1, 2, 0), (1, 0, 2)
    assert perm.compose(w, v) == (2, 1, 0)
    assert perm.compose(w, perm.inverse(w)) == perm.identity(3)
    assert perm.sign(perm.transposition(4, 0, 3)) == -1
    assert perm.from_json(perm.to_json(w)) == w
    with pytest.raises(ValueError):
        perm.from_json([1, 1, 2])


@given(st.permutations(range(4)), st.permutations(range(4)), st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_action_on_exponents_is_a_left_action(w, v, e):
    w, v, e = tuple(w), tuple(v), tuple(e)
    assert perm.act_on_exponents(perm.compose(w, v), e) == perm.act_on_exponents(w, perm.act_on_exponents(v, e))
    assert perm.sign(perm.compose(w, v)) == perm.sign(w) * perm.sign(v)
