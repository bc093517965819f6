import pytest
from hypothesis import given, strategies as st

from periodica.laurent import ONE, ZERO, LaurentPoly, ModPoly, q

polys = st.dictionaries(st.integers(-12, 12), st.integers(-50, 50), max_size=6).map(LaurentPoly)
small = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)
primes = st.sampled_from([3, 5, 7, 11])


def test_canonical_form_drops_zeros():
    assert LaurentPoly({3: 0, 1: 2}) == LaurentPoly({1: 2})
    assert LaurentPoly({}) == ZERO
    assert not ZERO


def test_text_format():
    assert str(LaurentPoly({1: 1, 3: 1, 5: 1, 9: -1})) == "-1*q^9 + 1*q^5 + 1*q^3 + 1*q^1"
    assert str(q + LaurentPoly.monomial(-1)) == "1*q^1 + 1*q^-1"
    assert str(ZERO) == "0"


def test_sym_and_mirror():
    assert LaurentPoly.sym(3) == LaurentPoly({3: 1, -3: -1})
    assert LaurentPoly.sym(3).mirror() == -LaurentPoly.sym(3)


def test_cube_expansion():
    t = LaurentPoly.sym(1)
    assert t**3 == LaurentPoly({3: 1, 1: -3, -1: 3, -3: -1})


def test_substitute_zero_rejected():
    with pytest.raises(ValueError):
        q.substitute(0)


def test_modpoly_requires_odd_prime():
    with pytest.raises(ValueError):
        ModPoly(2, {0: 1})
    with pytest.raises(ValueError):
        ModPoly(9, {0: 1})


def test_reduce_leaves_short_polynomials_alone():
    m = LaurentPoly({4: 1, 0: 2, -2: 1}).mod_p(5)
    f = LaurentPoly({1: 3, 0: 1}).mod_p(5)
    assert f.reduce(m) == f


def test_rem_monic_matches_division():
    g = LaurentPoly.sym(5)
    f = g * LaurentPoly({2: 3, -1: 1}) + LaurentPoly({1: 7})
    assert f.rem_monic(g) == LaurentPoly({1: 7})


@given(polys)
def test_parse_round_trip(f):
    assert LaurentPoly.parse(str(f)) == f


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * ONE == a and a + ZERO == a
    assert a - a == ZERO


@given(small, small)
def test_exact_division_inverts_multiplication(a, b):
    if b:
        assert (a * b).div_exact(b) == a


@given(polys, st.integers(1, 4))
def test_substitute_is_ring_map(a, k):
    assert (a * a).substitute(k) == a.substitute(k) * a.substitute(k)
    assert a.substitute(-1) == a.mirror()


@given(polys, polys, primes)
def test_mod_p_is_ring_map(a, b, p):
    assert (a * b).mod_p(p) == a.mod_p(p) * b.mod_p(p)
    assert a.mod_p(p).lift().mod_p(p) == a.mod_p(p)
    assert all(0 <= c < p for c in a.mod_p(p).lift().coeffs.values())


@given(small, small, primes)
def test_modular_reduction_is_a_remainder(a, m, p):
    mm = m.mod_p(p)
    if not mm:
        return
    r = a.mod_p(p).reduce(mm)
    assert r.is_zero() or r.span() < mm.span() or r == a.mod_p(p)
    assert (a.mod_p(p) - r).div_exact(mm) is not None or (a.mod_p(p) - r).is_zero()
