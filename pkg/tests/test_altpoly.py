import json
from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from almostcomm import altpoly as ap
from almostcomm import sampling
from almostcomm.acv.points import NormalFormParams, normal_form, psi
from almostcomm.errors import BoundExceeded
from almostcomm.exact import MPoly
from almostcomm.exact import perm
from almostcomm.exact.linalg import rank_of_vectors


def gens(n):
    vs = ap.ring_vars(n)
    return [MPoly.var(vs, t) for t in range(2 * n)]


def two_var(terms):
    return MPoly(("x", "y"), terms)


# alternants


def test_alternant_examples():
    x1, x2, y1, y2 = gens(2)
    assert ap.alternant([(0, 0), (1, 0)]) == x1 - x2
    assert ap.alternant([(0, 0), (0, 1)]) == y1 - y2
    assert ap.alternant([(1, 0), (0, 1)]) == x1 * y2 - x2 * y1


def test_label_validation():
    with pytest.raises(ValueError):
        ap.canonical_label([(1, 0), (1, 0)])
    with pytest.raises(ValueError):
        ap.canonical_label([(-1, 0), (1, 0)])
    assert ap.canonical_label([(0, 1), (2, 0)]) == ((2, 0), (0, 1))


labels = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=n, max_size=n, unique=True)
)


@settings(max_examples=60, deadline=None)
@given(labels)
def test_alternants_alternate(label):
    n = len(label)
    f = ap.alternant(label)
    assert ap.is_alternating(f, n)
    for a, b in [(s, t) for s in range(n) for t in range(s + 1, n)]:
        s = perm.transposition(n, a, b)
        assert f.permute_vars(list(s) + [n + s[t] for t in range(n)]) == -f


def antisymmetrize(e, n):
    """Sum over S_n of sign(w) w.(x^a y^b), computed directly on exponents."""
    vs = ap.ring_vars(n)
    out = MPoly.zero(vs)
    for w in perm.all_perms(n):
        image = [0] * (2 * n)
        for t in range(n):
            image[w[t]] = e[t]
            image[n + w[t]] = e[n + t]
        out = out + MPoly(vs, {tuple(image): perm.sign(w)})
    return out


def monomials(n, a, b):
    def comps(total, parts):
        if parts == 1:
            yield (total,)
            return
        for head in range(total + 1):
            for tail in comps(total - head, parts - 1):
                yield (head,) + tail

    return [xa + yb for xa in comps(a, n) for yb in comps(b, n)]


def span_rank(polys):
    if not polys:
        return 0
    _, vecs = ap._to_vectors(polys)
    return rank_of_vectors(vecs)


@pytest.mark.parametrize("n", [2, 3])
def test_a_basis_matches_antisymmetrization(n):
    for a, b in product(range(4), range(3)):
        oracle = span_rank([antisymmetrize(e, n) for e in monomials(n, a, b)])
        assert len(ap.a_basis(n, (a, b))) == oracle


def test_a_basis_examples():
    assert ap.a_basis(2, (1, 0)) == [((1, 0), (0, 0))]
    assert ap.a_basis(2, (0, 0)) == []
    for a, b in product(range(4), range(4)):
        assert ap.a_basis(1, (a, b)) == [((a, b),)]


def test_a_basis_is_independent():
    basis = [ap.alternant(lab) for lab in ap.a_basis(3, (3, 2))]
    assert span_rank(basis) == len(basis)


# A^k


def test_ak_with_k_one_is_a():
    table = ap.hilbert_series(2, 1, (3, 3))
    for d, dim in table.items():
        assert dim == len(ap.a_basis(2, d))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_n_one_gives_whole_ring(k):
    for (a, b), dim in ap.hilbert_series(1, k, (3, 3)).items():
        assert dim == 1


def test_n_two_squares_match_brute_force_span():
    bound = (3, 2)
    got = ap.hilbert_series(2, 2, bound)
    # oracle: products of antisymmetrized monomials, no labels involved
    alts = {}
    for a, b in product(range(bound[0] + 1), range(bound[1] + 1)):
        alts[(a, b)] = [antisymmetrize(e, 2) for e in monomials(2, a, b)]
    for (a, b) in got:
        products = []
        for a1, b1 in product(range(a + 1), range(b + 1)):
            for u in alts[(a1, b1)]:
                for v in alts[(a - a1, b - b1)]:
                    products.append(u * v)
        products = [p for p in products if not p.is_zero()]
        assert got[(a, b)] == span_rank(products)


def test_hilbert_pure_x_counts():
    # pure-x alternants for n=2 are Vandermonde times symmetric polys of degree d-1
    table = ap.hilbert_series(2, 1, (6, 0))
    for d in range(1, 7):
        assert table[(d, 0)] == (d - 1) // 2 + 1
    assert table[(0, 0)] == 0


def test_hilbert_n_one_binomial_table():
    # A^1 for n=1 is Q[x, y]; cumulative dims by total degree are binomial
    table = ap.hilbert_series(1, 1, (4, 4))
    for t in range(5):
        assert sum(v for (a, b), v in table.items() if a + b <= t) == comb(t + 2, 2)


def test_hilbert_monotone_in_bound():
    small = ap.hilbert_series(2, 2, (2, 2))
    large = ap.hilbert_series(2, 2, (3, 3))
    for d, v in small.items():
        assert v >= 0 and large[d] == v


def test_multiplication_by_elementary_y_embeds():
    table = ap.hilbert_series(2, 2, (3, 3))
    for (a, b), v in table.items():
        for r in (1, 2):
            if b + r <= 3:
                assert v <= table[(a, b + r)]


def test_products_land_in_higher_power():
    one = ap.ak_basis(2, 1, (2, 2))
    two = ap.ak_basis(2, 2, (3, 3))
    three = ap.ak_basis(2, 3, (3, 3))
    for (a1, b1), left in one.items():
        for (a2, b2), right in two.items():
            if a1 + a2 > 3 or b1 + b2 > 3:
                continue
            target = three[(a1 + a2, b1 + b2)]
            for u in left:
                for v in right:
                    assert span_rank(target + [u * v]) == len(target)


def test_bound_limits():
    with pytest.raises(BoundExceeded):
        ap.ak_basis(2, 1, (10, 10))
    with pytest.raises(BoundExceeded):
        ap.ak_basis(5, 1, (1, 1))
    with pytest.raises(ValueError):
        ap.ak_basis(2, 0, (1, 1))


# freeness


def test_freeness_n_one():
    rep = ap.freeness_certificate(1, 2, (3, 3))
    assert rep.certified and rep.verified_up_to == (3, 3)
    assert rep.generators == [(a, 0) for a in range(4)]


@pytest.mark.parametrize("k", [1, 2])
def test_freeness_n_two(k):
    rep = ap.freeness_certificate(2, k, (4, 4))
    assert rep.certified and rep.verified_up_to == (4, 4)
    assert rep.witness is None


def test_freeness_is_monotone():
    big = ap.freeness_certificate(2, 2, (4, 4))
    small = ap.freeness_certificate(2, 2, (2, 3))
    assert small.certified
    assert small.generators == [d for d in big.generators if d[0] <= 2 and d[1] <= 3]


def test_freeness_failure_reports_relation(monkeypatch):
    # replacing e_2(y) by e_1(y)^2 breaks freeness; the checker must say so with a relation
    real = ap.elementary_y
    monkeypatch.setattr(ap, "elementary_y", lambda n, r: real(n, 1) ** r)
    rep = ap.freeness_certificate(2, 1, (2, 3))
    assert rep.status == "failed"
    w = rep.witness
    assert w["bidegree"] == [0, 3] and w["rank"] < w["products"]
    assert w["relation"] and all(Fraction(t["coef"]) != 0 for t in w["relation"])
    # the relation really vanishes: both terms are (y1 - y2) e_1^2 up to the coefficients
    assert sum(Fraction(t["coef"]) for t in w["relation"]) == 0


def test_freeness_report_serializes():
    rep = ap.freeness_certificate(2, 1, (2, 2))
    data = json.loads(json.dumps(rep.to_json()))
    assert data["status"] == "certified" and data["verifiedUpTo"] == [2, 2]
    rows = rep.csv_rows()
    assert rows[0][0] == "n" and sum(r[4] for r in rows[1:]) == len(rep.generators)


# bridge to the almost-commuting variety


FAMILIES = [
    [two_var({(0, 0): 1}), two_var({(1, 0): 1})],
    [two_var({(0, 0): 1}), two_var({(0, 1): 1})],
    [two_var({(1, 0): 1, (0, 2): 3}), two_var({(2, 1): Fraction(1, 2), (0, 0): -1})],
    [two_var({(0, 0): 1}), two_var({(1, 0): 1}), two_var({(0, 1): 1, (2, 0): 1})],
]


@pytest.mark.parametrize("fs", FAMILIES)
def test_restriction_bridge_random_points(fs):
    r = sampling.rng(len(fs))
    for _ in range(10):
        x, y = sampling.rationals(r, len(fs)), sampling.rationals(r, len(fs))
        report = ap.restriction_bridge(fs, x, y)
        assert report["equal"]


def test_bridge_by_hand():
    x, y = [Fraction(3), Fraction(5)], [Fraction(1), Fraction(2)]
    rep = ap.restriction_bridge(FAMILIES[0], x, y)
    # det in the given order of (1, x): x_2 - x_1
    assert Fraction(rep["psi"]) == 2
    rep = ap.restriction_bridge(FAMILIES[1], x, y)
    assert Fraction(rep["wedge"]) == 1


def test_wedge_of_labels_is_alternant():
    for label in [((2, 1), (0, 0)), ((1, 1), (1, 0), (0, 2))]:
        assert ap.wedge(ap.label_polys(label)) == ap.alternant(label)


def test_products_of_wedges_lie_in_ak():
    fam = [FAMILIES[0], FAMILIES[1]]
    f = ap.product_of_wedges(fam)
    assert ap.in_ak(f, 2, 2)
    assert not ap.in_ak(gens(2)[0] * gens(2)[1], 2, 1)


def test_psi_vanishes_on_positive_strata():
    r = sampling.rng(7)
    for fs in FAMILIES[:3]:
        for k in (1, 2):
            q = normal_form(NormalFormParams(sampling.distinct_rationals(r, 2), sampling.rationals(r, 2), k, k))
            assert psi(fs, q) == 0
