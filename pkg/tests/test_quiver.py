import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from almostcomm import quiver as qv
from almostcomm.errors import BoundExceeded, NotSigmaPrime

FRAMED_JORDAN = qv.Quiver(2, ((0, 0), (1, 0)))  # loop at v, arrow s -> v


def test_ringel_examples():
    edgeless = qv.Quiver(3, ())
    assert qv.ringel(edgeless, (1, 2, 3), (4, 5, 6)) == 32
    assert qv.ringel(qv.jordan_quiver(), (5,), (5,)) == 0
    for n in range(1, 6):
        assert qv.ringel(FRAMED_JORDAN, (n, 1), (n, 1)) == 1 - n


def test_ringel_rejects_wrong_length():
    with pytest.raises(ValueError):
        qv.ringel(FRAMED_JORDAN, (1,), (1, 1))


def test_tits_p_examples():
    for n in range(1, 6):
        assert qv.tits_p(FRAMED_JORDAN, (n, 1)) == n
    assert qv.tits_p(FRAMED_JORDAN, (0, 1)) == 0
    for m in range(1, 5):
        assert qv.tits_p(FRAMED_JORDAN, (m, 0)) == 1


vectors3 = st.tuples(*[st.integers(0, 4)] * 3)


@given(vectors3, vectors3)
def test_form_expands_bilinearly(a, b):
    q = qv.Quiver(3, ((0, 1), (1, 2), (2, 2), (0, 2)))
    s = tuple(x + y for x, y in zip(a, b))
    assert qv.ringel(q, s, s) == qv.ringel(q, a, a) + qv.ringel(q, b, b) + qv.symmetric_form(q, a, b)
    assert qv.symmetric_form(q, a, b) == qv.symmetric_form(q, b, a)


def test_positive_roots_examples():
    a2 = qv.Quiver(2, ((0, 1),))
    assert [r for r, _ in qv.positive_roots(a2, (1, 1))] == [(0, 1), (1, 0), (1, 1)]
    found = {r for r, _ in qv.positive_roots(FRAMED_JORDAN, (2, 1))}
    assert {(1, 0), (2, 0), (0, 1), (1, 1), (2, 1)} <= found
    assert qv.positive_roots(qv.Quiver(1, ()), (3,)) == [((1,), "real")]


def brute_force_roots_a_type(k, bound):
    """Positive roots of an A_k path quiver: indicator vectors of intervals."""
    out = set()
    for lo in range(k):
        for hi in range(lo, k):
            v = tuple(1 if lo <= t <= hi else 0 for t in range(k))
            if all(x <= b for x, b in zip(v, bound)):
                out.add(v)
    return out


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_roots_of_path_quivers_are_intervals(k):
    path = qv.Quiver(k, tuple((t, t + 1) for t in range(k - 1)))
    bound = (2,) * k
    roots = qv.positive_roots(path, bound)
    assert {r for r, _ in roots} == brute_force_roots_a_type(k, bound)
    assert all(kind == "real" for _, kind in roots)


def test_affine_roots_are_real_or_multiples_of_delta():
    q = qv.cyclic_quiver(3)
    for r, kind in qv.positive_roots(q, (2, 2, 2)):
        if kind == "imaginary":
            assert r[0] == r[1] == r[2]
        assert qv.tits_q(q, r) == (0 if kind == "imaginary" else 1)


def test_r_lambda_examples():
    fa = qv.framed("A1", 2)
    everything = [r for r, _ in qv.positive_roots(fa.quiver, fa.alpha)]
    assert qv.r_lambda(fa.quiver, (0, 0, 0), fa.alpha) == everything
    lam = (Fraction(1), Fraction(-1), 0)
    assert fa.lambda_ok(lam)
    got = qv.r_lambda(fa.quiver, lam, fa.alpha)
    assert (1, 1, 0) in got and (1, 1, 1) in got and (2, 2, 1) in got
    generic = (Fraction(1), Fraction(1, 7), Fraction(3, 11))
    assert qv.r_lambda(fa.quiver, generic, fa.alpha) == []


def test_sigma_prime_decomps_framed_jordan():
    got = qv.sigma_prime_decomps(FRAMED_JORDAN, (0, 0), (2, 1))
    assert sorted(got) == sorted([((2, 1),), ((1, 1), (1, 0)), ((1, 0), (1, 0), (0, 1))])


def test_real_root_in_sigma_has_one_decomposition():
    a2 = qv.Quiver(2, ((0, 1),))
    lam = (1, -1)
    assert qv.is_sigma(a2, lam, (1, 1))
    assert qv.sigma_prime_decomps(a2, lam, (1, 1)) == [((1, 1),)]
    assert qv.component_count(a2, lam, (1, 1)) == 1


def test_delta_cannot_split():
    q = qv.cyclic_quiver(2)
    assert qv.sigma_prime_decomps(q, (0, 0), (1, 1)) == [((1, 1),)]


def test_not_sigma_prime_reports_witness():
    # 2 delta on the Jordan quiver: p(2) = 1 but (1) + (1) gives 2
    with pytest.raises(NotSigmaPrime) as info:
        qv.sigma_prime_decomps(qv.jordan_quiver(), (0,), (2,))
    assert info.value.witness == ((1,), (1,))


def test_enumeration_caps():
    fa = qv.framed("D4", 2)
    with pytest.raises(BoundExceeded):
        qv.component_count(fa.quiver, (0,) * 6, fa.alpha, max_roots=5)
    with pytest.raises(BoundExceeded):
        qv.component_count(FRAMED_JORDAN, (0, 0), (6, 1), max_parts=3)


@pytest.mark.parametrize("n", range(1, 7))
def test_framed_jordan_component_count(n):
    assert qv.component_count(FRAMED_JORDAN, (0, 0), (n, 1)) == n + 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_framed_cycle_component_count(n):
    fa = qv.framed("A1", n)
    assert qv.component_count(fa.quiver, (0, 0, 0), fa.alpha) == n + 1


def test_decompositions_audit_themselves():
    fa = qv.framed("A2", 2)
    lam = (0,) * 4
    for d in qv.sigma_prime_decomps(fa.quiver, lam, fa.alpha):
        assert tuple(map(sum, zip(*d))) == fa.alpha
        assert all(qv.is_root(fa.quiver, b) and qv.dot(b, lam) == 0 for b in d)
        assert sum(qv.tits_p(fa.quiver, b) for b in d) == qv.tits_p(fa.quiver, fa.alpha)


def test_enlarging_bound_keeps_decompositions():
    small = set(qv.all_decompositions(FRAMED_JORDAN, (0, 0), (2, 1)))
    # decompositions of (2,1) reappear inside those of (3,1) after adding a (1,0) part
    large = set(qv.all_decompositions(FRAMED_JORDAN, (0, 0), (3, 1)))
    for d in small:
        assert tuple(sorted(d + ((1, 0),), reverse=True)) in large


def test_expected_dim_examples():
    for n in range(1, 7):
        assert qv.expected_dim(FRAMED_JORDAN, (n, 1)) == n * n + 2 * n
    assert qv.expected_dim(qv.Quiver(2, ((0, 1),)), (1, 0)) == 0


@pytest.mark.parametrize("name", sorted(qv.AFFINE))
def test_framed_affine_dimension_identity(name):
    for n in range(1, 7):
        fa = qv.framed(name, n)
        delta_sq = sum(d * d for d in fa.delta)
        assert qv.expected_dim(fa.quiver, fa.alpha) == n * n * delta_sq + 2 * n


def test_frame_affine_examples():
    fa = qv.framed("jordan", 3)
    assert fa.alpha == (3, 1) and qv.tits_p(fa.quiver, fa.alpha) == 3
    assert qv.tits_q(qv.cyclic_quiver(2), (1, 1)) == 0
    assert qv.tits_q(qv.affine_d4(), (1, 1, 1, 1, 2)) == 0
    with pytest.raises(ValueError):
        qv.frame_affine(qv.affine_d4(), 0, 1, (1, 1, 1, 1, 1))


def test_quiver_json_round_trip():
    q = qv.framed("D4", 1).quiver
    assert qv.Quiver.from_json(json.loads(json.dumps(q.to_json()))) == q
    assert q.to_json()["edges"][-1] == [5, 0]
    with pytest.raises(ValueError):
        qv.Quiver(2, ((0, 2),))
