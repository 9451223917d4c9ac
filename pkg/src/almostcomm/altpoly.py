"""Alternating polynomials in 2n diagonal variables and their product spaces.

The ring is Q[x_1..x_n, y_1..y_n] with S_n permuting both sets of variables
simultaneously.  A graded piece of the alternating subspace A has the basis of
monomial alternants

    det( x_j^{p_t} y_j^{q_t} )_{t, j}

indexed by sets of n distinct exponent pairs, written in descending
lexicographic order.  A^k is the span of k-fold products.  Freeness of A^k over
the symmetric polynomials in y is certified bidegree by bidegree, up to a bound.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .acv.points import epsilon, psi
from .errors import BoundExceeded
from .exact import MPoly, RatMatrix
from .exact import perm
from .exact.linalg import kernel, rank_of_vectors, span_basis
from .exact.matrix import qstr

MAX_TOTAL_DEGREE = 16


def ring_vars(n):
    return tuple(f"x{k}" for k in range(1, n + 1)) + tuple(f"y{k}" for k in range(1, n + 1))


def canonical_label(pairs):
    label = tuple(sorted(((int(p), int(q)) for p, q in pairs), reverse=True))
    if len(set(label)) != len(label):
        raise ValueError(f"exponent pairs must be distinct: {label}")
    if any(p < 0 or q < 0 for p, q in label):
        raise ValueError(f"negative exponent in {label}")
    return label


def bidegree_of_label(label):
    return (sum(p for p, _ in label), sum(q for _, q in label))


def alternant(label, canonical=True):
    """det(x_j^{p_t} y_j^{q_t}); with ``canonical`` the rows are put in descending order first."""
    label = canonical_label(label) if canonical else tuple(label)
    n = len(label)
    terms = {}
    for w in perm.all_perms(n):
        e = [0] * (2 * n)
        for t, (p, q) in enumerate(label):
            e[w[t]] += p
            e[n + w[t]] += q
        key = tuple(e)
        terms[key] = terms.get(key, 0) + perm.sign(w)
    return MPoly(ring_vars(n), terms)


def diagonal_image(f, n, j):
    """f(x_j, y_j) for f in the two variables ('x', 'y')."""
    out = {}
    for (p, q), v in f.terms.items():
        e = [0] * (2 * n)
        e[j] = p
        e[n + j] = q
        out[tuple(e)] = v
    return MPoly(ring_vars(n), out)


def wedge(fs):
    """f_1 ^ ... ^ f_n = det(f_t(x_j, y_j)) for polynomials f_t in ('x', 'y')."""
    n = len(fs)
    entries = [[diagonal_image(f, n, j) for j in range(n)] for f in fs]
    out = MPoly.zero(ring_vars(n))
    for w in perm.all_perms(n):
        term = MPoly.constant(ring_vars(n), perm.sign(w))
        for t in range(n):
            term = term * entries[t][w[t]]
            if term.is_zero():
                break
        out = out + term
    return out


def label_polys(label):
    """The monomials x^p y^q of a label, in the label's order, as polynomials in ('x', 'y')."""
    return [MPoly(("x", "y"), {(p, q): 1}) for p, q in label]


def is_alternating(f, n):
    for k in range(n - 1):
        s = perm.transposition(n, k, k + 1)
        images = list(s) + [n + s[t] for t in range(n)]
        if f.permute_vars(images) != -f:
            return False
    return True


def bidegree_parts(f, n):
    """Split f into bidegree-homogeneous components."""
    parts = {}
    for e, v in f.terms.items():
        key = (sum(e[:n]), sum(e[n:]))
        parts.setdefault(key, {})[e] = v
    return {k: MPoly(f.vars, t) for k, t in sorted(parts.items())}


def a_basis(n, bidegree):
    """Labels whose alternants form a basis of A in the given bidegree."""
    a, b = bidegree
    pairs = sorted(((p, q) for p in range(a + 1) for q in range(b + 1)), reverse=True)
    out = []
    for combo in combinations(pairs, n):
        if bidegree_of_label(combo) == (a, b):
            out.append(tuple(combo))
    return sorted(out)


# vector conversion


def _to_vectors(polys):
    monos = sorted({e for f in polys for e in f.terms})
    index = {e: t for t, e in enumerate(monos)}
    vectors = []
    for f in polys:
        v = [Fraction(0)] * len(monos)
        for e, c in f.terms.items():
            v[index[e]] = c
        vectors.append(v)
    return monos, vectors


def _from_vector(vars, monos, v):
    return MPoly(vars, {e: c for e, c in zip(monos, v) if c})


def _basis_of_span(polys, vars):
    if not polys:
        return []
    monos, vectors = _to_vectors(polys)
    return [_from_vector(vars, monos, list(v)) for v in span_basis(vectors, len(monos))]


def _check_bound(n, bound):
    a, b = bound
    if a < 0 or b < 0:
        raise ValueError("bidegree bound must be nonnegative")
    if a + b > MAX_TOTAL_DEGREE or n > 4:
        raise BoundExceeded(f"bidegree {bound} for n={n} exceeds the configured limit")


def _bidegrees(bound):
    return [(a, b) for a in range(bound[0] + 1) for b in range(bound[1] + 1)]


def ak_basis(n, k, bound):
    """{bidegree: basis polynomials of A^k} for every bidegree <= bound."""
    if k < 1:
        raise ValueError("k must be at least 1")
    _check_bound(n, bound)
    vars = ring_vars(n)
    level1 = {d: [alternant(lab) for lab in a_basis(n, d)] for d in _bidegrees(bound)}
    current = level1
    for _ in range(k - 1):
        nxt = {}
        for a, b in _bidegrees(bound):
            products = []
            for (a1, b1), left in current.items():
                if a1 > a or b1 > b:
                    continue
                for u in left:
                    for v in level1[(a - a1, b - b1)]:
                        products.append(u * v)
            nxt[(a, b)] = _basis_of_span(products, vars)
        current = nxt
    return current


def hilbert_series(n, k, bound):
    return {d: len(basis) for d, basis in sorted(ak_basis(n, k, bound).items())}


def elementary_y(n, r):
    vars = ring_vars(n)
    terms = {}
    for subset in combinations(range(n), r):
        e = [0] * (2 * n)
        for s in subset:
            e[n + s] = 1
        terms[tuple(e)] = 1
    return MPoly(vars, terms)


def weighted_exponents(n, degree):
    """Exponents mu with sum_r r * mu_r = degree (monomials in e_1..e_n of that y-degree)."""
    out = []
    for mu in product(*(range(degree // r + 1) for r in range(1, n + 1))):
        if sum((r + 1) * m for r, m in enumerate(mu)) == degree:
            out.append(mu)
    return out


@dataclass
class FreenessReport:
    n: int
    k: int
    bound: tuple
    generators: list = field(default_factory=list)  # bidegrees, with multiplicity
    verified_up_to: tuple = None
    status: str = "certified"
    witness: dict = None

    @property
    def certified(self):
        return self.status == "certified"

    def to_json(self):
        return {
            "n": self.n,
            "k": self.k,
            "bound": list(self.bound),
            "generators": [list(d) for d in self.generators],
            "verifiedUpTo": list(self.verified_up_to) if self.verified_up_to else None,
            "status": self.status,
            "witness": self.witness,
        }

    def csv_rows(self):
        counts = {}
        for d in self.generators:
            counts[d] = counts.get(d, 0) + 1
        rows = [["n", "k", "x_degree", "y_degree", "generators", "status"]]
        for (a, b), m in sorted(counts.items()):
            rows.append([self.n, self.k, a, b, m, self.status])
        return rows


def freeness_certificate(n, k, bound):
    """Certify A^k free over Q[y]^{S_n} in every bidegree <= bound.

    Generators are lifts of a basis of A^k / m A^k with m generated by
    e_1(y)..e_n(y).  In each bidegree the products generator * e^mu must be
    linearly independent and as many as dim A^k there; together they then form
    a basis.  A failure carries an explicit linear relation.
    """
    bound = tuple(bound)
    E = ak_basis(n, k, bound)
    es = [elementary_y(n, r) for r in range(1, n + 1)]
    report = FreenessReport(n, k, bound)
    gens = {}  # bidegree -> list of generator polynomials
    for a in range(bound[0] + 1):
        for b in range(bound[1] + 1):
            here = E[(a, b)]
            mE = [e * f for r, e in enumerate(es, start=1) if b - r >= 0 for f in E[(a, b - r)]]
            seed = _basis_of_span(mE, ring_vars(n)) if mE else []
            chosen = []
            for f in here:
                _, vecs = _to_vectors(seed + chosen + [f])
                if rank_of_vectors(vecs) > len(seed) + len(chosen):
                    chosen.append(f)
            gens[(a, b)] = chosen
            report.generators.extend([(a, b)] * len(chosen))
    for a in range(bound[0] + 1):
        for b in range(bound[1] + 1):
            labels, products = [], []
            for b0 in range(b + 1):
                for gi, g in enumerate(gens[(a, b0)]):
                    for mu in weighted_exponents(n, b - b0):
                        p = g
                        for e, m in zip(es, mu):
                            if m:
                                p = p * e**m
                        labels.append({"generator": [a, b0, gi], "mu": list(mu)})
                        products.append(p)
            dim = len(E[(a, b)])
            if products:
                monos, vecs = _to_vectors(products)
                r = rank_of_vectors(vecs)
            else:
                vecs, r = [], 0
            if r != len(products) or len(products) != dim:
                report.status = "failed"
                witness = {"bidegree": [a, b], "dim": dim, "products": len(products), "rank": r}
                if r != len(products):
                    relation = kernel(RatMatrix.from_columns(vecs))[0]
                    witness["relation"] = [
                        dict(lab, coef=qstr(c)) for lab, c in zip(labels, relation) if c
                    ]
                report.witness = witness
                return report
            report.verified_up_to = (a, b)
    return report


# bridge to the almost-commuting variety


def restriction_bridge(fs, x, y):
    """Compare psi(fs, epsilon(x, y)) with the wedge polynomial evaluated at (x, y)."""
    n = len(fs)
    q = epsilon(list(x), list(y))
    lhs = psi(fs, q)
    rhs = wedge(fs).evaluate(list(x) + list(y))
    return {"psi": qstr(lhs), "wedge": qstr(rhs), "equal": lhs == rhs, "n": n}


def in_ak(f, n, k):
    """True iff every bidegree component of f lies in A^k."""
    for (a, b), part in bidegree_parts(f, n).items():
        basis = ak_basis(n, k, (a, b))[(a, b)]
        monos, vecs = _to_vectors(basis + [part])
        if rank_of_vectors(vecs) != len(basis):
            return False
    return True


def product_of_wedges(families):
    """Restriction of psi_1 ... psi_k to the diagonal: the product of the wedges."""
    out = None
    for fs in families:
        w = wedge(fs)
        out = w if out is None else out * w
    return out


__all__ = [
    "FreenessReport",
    "a_basis",
    "ak_basis",
    "alternant",
    "canonical_label",
    "freeness_certificate",
    "hilbert_series",
    "in_ak",
    "is_alternating",
    "label_polys",
    "product_of_wedges",
    "restriction_bridge",
    "wedge",
]

