"""The rational Cherednik algebra of gl_n with formal parameter c.

Elements are kept in PBW normal form, sums of x^a w y^b with coefficients in
Q[c].  The defining relations are

    w x_k w^-1 = x_{w(k)},   w y_k w^-1 = y_{w(k)},
    [y_i, x_j] = c s_ij  (i != j),   [y_k, x_k] = 1 - c sum_{i != k} s_ik,

and x's (resp. y's) commute among themselves.  Permutations follow the
conventions of :mod:`almostcomm.exact.perm`.

The polynomial representation is the induced module from the trivial
representation of C[y] # S_n, identified with C[x_1..x_n].  ``act_poly`` is
computed from the relations alone; ``dunkl`` is the closed-form difference
operator and is cross-checked against it.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial
import random

from .errors import NotDivisible, NotSymmetric, InternalInconsistency
from .exact import perm
from .exact.cpoly import CPoly
from .exact.mpoly import MPoly, xvars
from .kernels import DEFAULT_PRIME, rank_mod_p

ONE_C = CPoly.const(1)
C = CPoly.c()


def _coef(v):
    return v if isinstance(v, CPoly) else CPoly.const(v)


def _add(terms, key, coef):
    v = terms.get(key)
    v = coef if v is None else v + coef
    if v:
        terms[key] = v
    else:
        terms.pop(key, None)


class HElem:
    """Immutable element of H_c; ``terms`` maps (xexp, w, yexp) to a CPoly."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        clean = {}
        for (a, w, b), v in (terms or {}).items():
            a, w, b = tuple(a), tuple(w), tuple(b)
            if len(a) != n or len(b) != n or not perm.is_permutation(w, n):
                raise ValueError(f"bad PBW key {(a, w, b)} for n={n}")
            _add(clean, (a, w, b), _coef(v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HElem is immutable")

    @classmethod
    def _raw(cls, n, terms):
        h = object.__new__(cls)
        object.__setattr__(h, "n", n)
        object.__setattr__(h, "terms", terms)
        return h

    # generators

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def scalar(cls, n, v=1):
        return cls(n, {((0,) * n, perm.identity(n), (0,) * n): v})

    @classmethod
    def pbw(cls, xexp, w, yexp, coef=1):
        return cls(len(w), {(tuple(xexp), tuple(w), tuple(yexp)): coef})

    @classmethod
    def x(cls, n, k):
        return cls.pbw(_unit(n, k), perm.identity(n), (0,) * n)

    @classmethod
    def y(cls, n, k):
        return cls.pbw((0,) * n, perm.identity(n), _unit(n, k))

    @classmethod
    def group(cls, w):
        n = len(w)
        return cls.pbw((0,) * n, w, (0,) * n)

    # protocol

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, HElem):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _same(self, other):
        if not isinstance(other, HElem) or other.n != self.n:
            raise ValueError("elements of different algebras")

    def __add__(self, other):
        self._same(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            _add(terms, k, v)
        return HElem._raw(self.n, terms)

    def __neg__(self):
        return HElem._raw(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = _coef(s)
        if not s:
            return HElem.zero(self.n)
        out = {}
        for k, v in self.terms.items():
            p = v * s
            if p:
                out[k] = p
        return HElem._raw(self.n, out)

    def __mul__(self, other):
        if isinstance(other, HElem):
            return h_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0][0]) + sum(kv[0][2]), kv[0]))

    def degree(self):
        return max((sum(a) + sum(b) for a, _, b in self.terms), default=-1)

    def specialize_c(self, value):
        out = {}
        for k, v in self.terms.items():
            w = v(value)
            if w:
                out[k] = w
        return out

    def to_json(self):
        return [
            {"x": list(a), "w": perm.to_json(w), "y": list(b), "coef": str(v)} for (a, w, b), v in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, n, data):
        terms = {}
        for t in data:
            key = (tuple(t["x"]), perm.from_json(t["w"]), tuple(t["y"]))
            _add(terms, key, CPoly.parse(t["coef"]))
        return cls(n, terms)

    def __repr__(self):
        if not self.terms:
            return "HElem(0)"
        parts = []
        for (a, w, b), v in self.sorted_terms():
            parts.append(f"({v})*x^{list(a)}*w{perm.to_json(w)}*y^{list(b)}")
        return " + ".join(parts)


def _unit(n, k):
    return tuple(1 if t == k else 0 for t in range(n))


def _shift(exps, k, d=1):
    e = list(exps)
    e[k] += d
    return tuple(e)


# normal ordering


@lru_cache(maxsize=None)
def _y_past_x(i, a):
    """[y_i, x^a] as a dict (xexp, w) -> CPoly; it has no y part.

    Peel off x_j for the first j with a_j > 0 and use
    [y_i, x_j g] = [y_i, x_j] g + x_j [y_i, g].
    """
    n = len(a)
    j = next((t for t, e in enumerate(a) if e), None)
    if j is None:
        return {}
    rest = _shift(a, j, -1)
    out = {}
    ident = perm.identity(n)
    if j == i:
        _add(out, (rest, ident), ONE_C)
        for k in range(n):
            if k != i:
                s = perm.transposition(n, i, k)
                _add(out, (perm.act_on_exponents(s, rest), s), -C)
    else:
        s = perm.transposition(n, i, j)
        _add(out, (perm.act_on_exponents(s, rest), s), C)
    for (e, w), v in _y_past_x(i, rest).items():
        _add(out, (_shift(e, j), w), v)
    return out


def _lmul_y(i, h):
    """y_i * h for h in PBW form."""
    n = h.n
    out = {}
    for (a, w, b), v in h.terms.items():
        # y_i x^a = x^a y_i + [y_i, x^a];  y_i w = w y_{w^-1(i)}
        k = perm.inverse(w)[i]
        _add(out, (a, w, _shift(b, k)), v)
        for (e, u), coef in _y_past_x(i, a).items():
            _add(out, (e, perm.compose(u, w), b), coef * v)
    return HElem._raw(n, out)


def _lmul_w(u, h):
    out = {}
    for (a, w, b), v in h.terms.items():
        _add(out, (perm.act_on_exponents(u, a), perm.compose(u, w), b), v)
    return HElem._raw(h.n, out)


def _lmul_x(e, h):
    out = {}
    for (a, w, b), v in h.terms.items():
        _add(out, (tuple(p + q for p, q in zip(e, a)), w, b), v)
    return HElem._raw(h.n, out)


def _lmul_term(a, w, b, h):
    for i, e in enumerate(b):
        for _ in range(e):
            h = _lmul_y(i, h)
    return _lmul_x(a, _lmul_w(w, h))


def h_mul(p, q):
    """Product in PBW normal form, exact in c."""
    p._same(q)
    out = {}
    for (a, w, b), v in p.terms.items():
        for key, coef in _lmul_term(a, w, b, q).terms.items():
            _add(out, key, coef * v)
    return HElem._raw(p.n, out)


def commutator(p, q):
    return h_mul(p, q) - h_mul(q, p)


def fourier(h):
    """The automorphism x_i -> y_i, y_i -> -x_i, w -> w."""
    n = h.n
    out = HElem.zero(n)
    ident = perm.identity(n)
    zero = (0,) * n
    for (a, w, b), v in h.terms.items():
        # image y^a w (-x)^b, normal ordered by left multiplication
        sign = -1 if sum(b) % 2 else 1
        t = _lmul_w(w, HElem._raw(n, {(b, ident, zero): v * sign}))
        for i, e in enumerate(a):
            for _ in range(e):
                t = _lmul_y(i, t)
        out = out + t
    return out


def symmetrizer(n):
    """e = (1/n!) sum over S_n."""
    weight = CPoly.const(Fraction(1, factorial(n)))
    zero = (0,) * n
    return HElem._raw(n, {(zero, w, zero): weight for w in perm.all_perms(n)})


def spherical(h):
    e = symmetrizer(h.n)
    return h_mul(h_mul(e, h), e)


# polynomial representation


def poly_ring(n):
    return xvars(n)


def _as_poly(n, f):
    if isinstance(f, MPoly):
        if f.vars != poly_ring(n):
            raise ValueError(f"expected a polynomial in {poly_ring(n)}")
        return f
    return MPoly.constant(poly_ring(n), f)


def act_group(w, f):
    """w . f with x_k -> x_{w(k)}."""
    return f.permute_vars(w)


def _relation_apply(n, i, j, f):
    """[y_i, x_j] acting on f through its image in C S_n on the trivial-induced module."""
    if i != j:
        return act_group(perm.transposition(n, i, j), f).scale(C)
    out = f
    for k in range(n):
        if k != i:
            out = out - act_group(perm.transposition(n, i, k), f).scale(C)
    return out


@lru_cache(maxsize=None)
def _y_on_monomial(i, a):
    """y_i(x^a) via y_i(1) = 0 and y_i(x_j g) = x_j y_i(g) + [y_i, x_j] g."""
    n = len(a)
    ring = poly_ring(n)
    j = next((t for t, e in enumerate(a) if e), None)
    if j is None:
        return MPoly.zero(ring, "Q[c]")
    rest = _shift(a, j, -1)
    g = MPoly.monomial(ring, rest, 1)
    return _y_on_monomial(i, rest).mul_monomial(_unit(n, j)) + _relation_apply(n, i, j, g)


def act_y(i, f):
    out = MPoly.zero(f.vars, "Q[c]")
    for a, v in f.terms.items():
        out = out + _y_on_monomial(i, a).scale(v)
    return out


def act_poly(h, f):
    """The action of an algebra element on C[x] (the induced module)."""
    n = h.n
    f = _as_poly(n, f)
    out = MPoly.zero(f.vars, "Q[c]")
    for (a, w, b), v in h.terms.items():
        g = f
        for i in reversed(range(n)):
            for _ in range(b[i]):
                g = act_y(i, g)
        g = act_group(w, g).mul_monomial(a)
        out = out + g.scale(v)
    return out


@lru_cache(maxsize=None)
def _divided_difference(i, j, a):
    n = len(a)
    ring = poly_ring(n)
    f = MPoly.monomial(ring, a, 1)
    num = f - act_group(perm.transposition(n, i, j), f)
    den = MPoly.var(ring, i) - MPoly.var(ring, j)
    try:
        return num.exact_divide(den)
    except NotDivisible as exc:  # pragma: no cover - would be a bug
        raise InternalInconsistency(f"divided difference of x^{a} failed: {exc}") from exc


def dunkl(i, f):
    """df/dx_i - c sum_{j != i} (f - s_ij f)/(x_i - x_j); ``i`` is 0-based."""
    n = f.nvars
    if not 0 <= i < n:
        raise ValueError(f"index {i} out of range for n={n}")
    out = f.diff(i)
    for a, v in f.terms.items():
        for j in range(n):
            if j != i:
                out = out - _divided_difference(i, j, a).scale(_coef(v) * C)
    return MPoly(out.vars, out.terms, "Q[c]")


def symmetrize(f):
    n = f.nvars
    out = MPoly.zero(f.vars, f.domain)
    for w in perm.all_perms(n):
        out = out + act_group(w, f)
    return out.scale(Fraction(1, factorial(n)))


def is_symmetric(f):
    n = f.nvars
    return all(act_group(perm.transposition(n, k, k + 1), f) == f for k in range(n - 1))


def spherical_act(u, f):
    """Action of a spherical element on a symmetric polynomial; the result must be symmetric."""
    f = _as_poly(u.n, f)
    if not is_symmetric(f):
        raise NotSymmetric("input polynomial is not symmetric")
    g = act_poly(u, f)
    if not is_symmetric(g):
        raise NotSymmetric("result is not symmetric; the element is not spherical")
    return g


# PBW shadow


def _monomials(nvars, max_degree):
    out = []
    for d in range(max_degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for k in combo:
                e[k] += 1
            out.append(tuple(e))
    return out


def expected_pbw_count(n, d):
    return factorial(n) * comb(2 * n + d, d)


def reverse_ordered_spanning_set(n, d):
    """Normal forms of y^b w x^a for every |a| + |b| <= d and every w."""
    out = []
    zero = (0,) * n
    ident = perm.identity(n)
    for mono in _monomials(2 * n, d):
        a, b = mono[:n], mono[n:]
        xa = HElem._raw(n, {(a, ident, zero): ONE_C})
        for w in perm.all_perms(n):
            out.append(_lmul_term(zero, w, b, xa))
    return out


def _mod_p(v, c_value, p):
    q = v(c_value)
    return q.numerator % p * pow(q.denominator % p, -1, p) % p


def _rank_over_qc(rows):
    """Exact rank over Q(c) by fraction-free elimination with CPoly entries."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    prev = ONE_C
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(rank + 1, len(rows)):
            row = rows[r]
            rows[r] = [(pr[col] * row[t] - row[col] * pr[t]) / prev for t in range(ncols)]
        prev = pr[col]
        rank += 1
    return rank


def pbw_count(n, d, seed=0):
    """Rank over Q(c) of the reverse-ordered monomials of degree <= d.

    A specialization of c modulo a large prime gives a lower bound that is
    exact whenever it reaches the number of spanning elements; otherwise the
    rank is decided by elimination over Q[c].
    """
    elems = reverse_ordered_spanning_set(n, d)
    keys = sorted({k for h in elems for k in h.terms})
    index = {k: t for t, k in enumerate(keys)}
    c_value = random.Random(seed).randint(2, 10**6)
    p = DEFAULT_PRIME
    rows = []
    for h in elems:
        row = [0] * len(keys)
        for k, v in h.terms.items():
            row[index[k]] = _mod_p(v, c_value, p)
        rows.append(row)
    r = rank_mod_p(rows, len(keys), p)
    if r == len(elems):
        return r
    full = []
    for h in elems:
        row = [CPoly()] * len(keys)
        for k, v in h.terms.items():
            row[index[k]] = v
        full.append(row)
    return _rank_over_qc(full)


# relation suite on the polynomial representation


def relation_defects(n, f, i, j):
    """Residuals of the Dunkl relations at (i, j) on f; all vanish when the relations hold."""
    ring = poly_ring(n)
    xj = MPoly.var(ring, j)
    name = "[D_i,x_j]=c s_ij" if i != j else "[D_i,x_i]=1-c sum s_ik"
    out = {name: dunkl(i, xj * f) - xj * dunkl(i, f) - _relation_apply(n, i, j, f)}
    if i != j:
        out["[D_i,D_j]=0"] = dunkl(i, dunkl(j, f)) - dunkl(j, dunkl(i, f))
        s = perm.transposition(n, i, j)
        out["s D_i s=D_j"] = act_group(s, dunkl(i, act_group(s, f))) - dunkl(j, f)
    out["dunkl=act_poly"] = dunkl(i, f) - act_y(i, f)
    return out
