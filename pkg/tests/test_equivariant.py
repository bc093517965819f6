import pytest
from hypothesis import assume, given, settings, strategies as st

from periodica.diagram import OrientationMismatch, PeriodicTangleCode, braid_tangle, load_diagram
from periodica.equivariant import (
    check_decomposition,
    check_skein,
    dj_state_sum,
    dj_trivial,
    dj_vector,
    equiv_jones,
    poly_P,
    qdim_M,
    totient,
)
from periodica.laurent import LaurentPoly
from periodica.states import jones_kauffman

from oracles import aperiodic_orbits, binomial_identity, trivial_dj_bruteforce, trivial_dj_fixed_points

U = LaurentPoly({1: 1, -1: 1})


def test_totient():
    assert [totient(m) for m in (1, 3, 9, 25, 12)] == [1, 2, 6, 20, 4]


def test_poly_P_examples():
    assert poly_P(3, 0) == U
    assert poly_P(3, 1) == U
    assert poly_P(5, 1) == LaurentPoly({3: 1, 1: 2, -1: 2, -3: 1})
    assert poly_P(3, 2) == LaurentPoly({7: 1, 5: 4, 3: 9, 1: 14, -1: 14, -3: 9, -5: 4, -7: 1})


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1), (7, 1)])
def test_poly_P_counts_aperiodic_orbits(p, n):
    assert poly_P(p, n) == LaurentPoly(aperiodic_orbits(p, n))


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)])
def test_poly_P_palindromic_positive(p, n):
    P = poly_P(p, n)
    assert P == P.mirror()
    assert all(c > 0 for c in P.coeffs.values())


def test_qdim_M_examples():
    assert qdim_M(3, 1, 0, 1, 0) == LaurentPoly({3: 1, -3: 1})
    assert qdim_M(3, 1, 1, 1, 0) == U
    assert qdim_M(3, 1, 0, 1, 1) == U * LaurentPoly({3: 1, -3: 1})
    assert dj_trivial(3, 1, 1, 1, 0) == LaurentPoly({3: 1, -3: 1})
    assert dj_trivial(3, 1, 0, 1, 0) == U
    assert dj_trivial(3, 0, 0, 2, 0) == U**2


def test_qdim_M_without_orbits():
    assert qdim_M(5, 2, 0, 0, 2) == U**2
    assert qdim_M(5, 2, 1, 0, 2).is_zero() and qdim_M(5, 2, 2, 0, 2).is_zero()


@pytest.mark.parametrize("p,n,k,f", [(3, 1, 1, 0), (3, 1, 2, 1), (3, 1, 3, 0), (3, 2, 1, 1), (5, 1, 2, 2), (3, 1, 4, 2)])
def test_qdim_M_matches_word_enumeration(p, n, k, f):
    brute = trivial_dj_bruteforce(p, n, k, f)
    assert [qdim_M(p, n, s, k, f) for s in range(n + 1)] == [LaurentPoly(x) for x in brute]


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
@pytest.mark.parametrize("f", [0, 1, 2])
def test_qdim_M_matches_fixed_point_count(p, n, k, f):
    ref = trivial_dj_fixed_points(p, n, k, f)
    got = [qdim_M(p, n, s, k, f) for s in range(n + 1)]
    assert got == [LaurentPoly(x) for x in ref]
    total = sum((g.scale(p**s) for s, g in enumerate(got)), LaurentPoly())
    assert total == LaurentPoly(binomial_identity(k, f, p**n))


def test_trefoil_difference_polynomials(data):
    code = load_diagram(data("trefoil.ptc"))
    J = LaurentPoly({1: 1, 3: 1, 5: 1, 9: -1})
    assert dj_state_sum(code, 1) == J
    assert dj_state_sum(code, 0).is_zero()
    vec = dj_vector(code)
    assert vec.jones() == J
    assert equiv_jones(code, 0) - equiv_jones(code, 1) == vec.dj[0]


def test_zero_crossing_state_sum_is_trivial_value(data):
    code = load_diagram(data("unlink_k1f0_p3.ptc"))
    assert dj_state_sum(code, 1) == dj_trivial(3, 1, 1, 1, 0)
    assert dj_state_sum(code, 0) == dj_trivial(3, 1, 0, 1, 0)


def test_unknot_through_axis():
    code = PeriodicTangleCode(5, 1, braid_tangle(1, []))
    ok, report = check_decomposition(code)
    assert ok and report["jones"] == str(U)


def test_decomposition_nontrivial_isotropy():
    # T(9,2) has states fixed by the order-3 subgroup that are not fixed by everything
    code = PeriodicTangleCode(3, 2, braid_tangle(3, [1, -2]))
    ok, report = check_decomposition(code)
    assert ok, report


tangle_words = st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=2)


@settings(max_examples=12, deadline=None)
@given(tangle_words, st.sampled_from([1, 2]), st.sampled_from([(1, 1, 1), (1, -1, 1), (-1, 1, 1)]))
def test_skein_relation_random_tangles(word, n, orient):
    try:
        t = braid_tangle(3, word, orient)
    except OrientationMismatch:
        assume(False)
    code = PeriodicTangleCode(3, n, t)
    for c in t.crossings:
        rep = check_skein(code, c.id)
        assert rep.exact_identity, rep.to_json()
        assert all(rep.congruences.values()), rep.to_json()


@settings(max_examples=10, deadline=None)
@given(tangle_words, st.sampled_from([3, 5]))
def test_difference_polynomials_integral_and_decompose(word, p):
    code = PeriodicTangleCode(p, 1, braid_tangle(3, word))
    ok, report = check_decomposition(code)
    assert ok, report


@pytest.mark.parametrize("p,n", [(3, 3), (5, 2)])
def test_poly_P_is_top_stratum_of_one_orbit(p, n):
    # one free orbit: the top difference polynomial counts words of exact period p^n
    assert poly_P(p, n) == LaurentPoly(trivial_dj_fixed_points(p, n, 1, 0)[n])
