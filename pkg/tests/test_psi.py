import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covseries.poly import (
    BinomFactor,
    FactoredRational,
    TPoly,
    ZTPoly,
    equal_rational,
    expand_truncated,
    normalize,
)
from covseries.psi import big_psi_truncated, psi_monomial, psi_poly, psi_rational, qgeom
from covseries.springer import poincare_series

from oracles import t_series

small_t = st.dictionaries(st.integers(0, 12), st.integers(-6, 6), max_size=8).map(TPoly)


def test_psi_monomial_examples():
    for n in range(-2, 6):
        expected = ZTPoly() if n < 0 else ZTPoly({(0, 0): 1})
        assert psi_monomial(n, 0) == expected
    for m in range(10):
        assert psi_monomial(1, m) == ZTPoly.monomial(m, 0)
        assert psi_monomial(0, m) == ZTPoly({(0, 0): 1})
        assert psi_monomial(-1, m) == ZTPoly()
    assert psi_monomial(3, 4) == ZTPoly.monomial(2, 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_psi_monomial_round_trip(n):
    seen = set()
    for m in range(60):
        ((i, j),) = psi_monomial(n, m).terms
        assert 0 <= j < n and n * i - j == m
        seen.add((i, j))
    assert len(seen) == 60


def test_psi_poly_examples():
    assert psi_poly(2, TPoly({0: 1, 4: 1})) == ZTPoly({(0, 0): 1, (2, 0): 1})
    assert psi_poly(3, TPoly()) == ZTPoly()
    assert psi_poly(1, TPoly.from_coeffs([1, 1, 1])) == ZTPoly({(0, 0): 1, (1, 0): 1, (2, 0): 1})
    assert psi_poly(0, TPoly({0: 2, 5: 3})) == ZTPoly({(0, 0): 5})
    assert psi_poly(-3, TPoly({0: 2})) == ZTPoly()


@given(st.integers(1, 6), small_t)
def test_psi_poly_is_termwise(n, p):
    expected = ZTPoly()
    for m, c in p.terms:
        expected = expected + psi_monomial(n, m) * c
    assert psi_poly(n, p) == expected


@given(st.integers(-1, 6), small_t, small_t)
def test_psi_poly_linear(n, p, q):
    assert psi_poly(n, p + q) == psi_poly(n, p) + psi_poly(n, q)


def test_qgeom_examples():
    assert qgeom(1, 5) == TPoly({0: 1})
    assert qgeom(2, 4) == TPoly({0: 1, 4: 1})
    assert qgeom(3, 2) == TPoly({0: 1, 2: 1, 4: 1})


def test_psi_rational_examples():
    got = psi_rational(2, TPoly({0: 1}), [4])
    assert got == FactoredRational(ZTPoly({(0, 0): 1, (2, 0): 1}), (BinomFactor(4, 0),))
    assert normalize(got) == FactoredRational(ZTPoly({(0, 0): 1}), (BinomFactor(2, 0),))
    assert psi_rational(1, TPoly({0: 1}), []) == FactoredRational(ZTPoly({(0, 0): 1}))


@settings(max_examples=300)
@given(st.integers(1, 6), small_t, small_t)
def test_psi_pulls_out_polynomials_in_t_to_the_n(n, R, H):
    lhs = psi_poly(n, R.substitute_power(n) * H)
    assert lhs == ZTPoly.from_z(R) * psi_poly(n, H)
    as_rational = psi_rational(n, R.substitute_power(n) * H, [])
    assert equal_rational(as_rational, FactoredRational(lhs))


@settings(max_examples=300)
@given(
    st.integers(1, 6),
    st.dictionaries(st.integers(0, 8), st.integers(-6, 6), max_size=6),
    st.lists(st.integers(1, 6), max_size=4),
    st.integers(0, 5),
)
def test_psi_rational_matches_termwise_folding(n, R, ks, imax):
    coeffs = t_series(R, ks, n * imax)
    folded = psi_poly(n, TPoly(enumerate(coeffs)))
    closed = expand_truncated(psi_rational(n, TPoly(R), ks), imax, n - 1)
    assert folded.truncate(imax, n - 1) == closed


def test_big_psi_examples():
    for n in range(1, 5):
        for i in range(4):
            got = big_psi_truncated(n, ZTPoly.monomial(i, n * i), 5, 5)
            assert got == ZTPoly.monomial(i, 0)
    # n*i - j < 0 is dropped: z t^5 under Psi_2 has no image
    assert big_psi_truncated(2, ZTPoly({(1, 5): 1, (1, 1): 4}), 3, 3) == ZTPoly({(1, 1): 4})


def _reflected_generating_function(d, imax):
    # (1 - t^2) / ((1 - z)(1 - z t^2)...(1 - z t^(2d))), complete to t-degree d*imax
    gf = FactoredRational(
        ZTPoly({(0, 0): 1, (0, 2): -1}), tuple(BinomFactor(1, 2 * e) for e in range(d + 1))
    )
    return expand_truncated(gf, imax, d * imax)


def test_big_psi_of_generating_function_d2():
    S = _reflected_generating_function(2, 2)
    assert big_psi_truncated(2, S, 2, 2) == ZTPoly({(0, 0): 1, (1, 2): 1, (2, 0): 1})


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_big_psi_of_generating_function_is_the_series(d):
    imax = 6
    S = _reflected_generating_function(d, imax)
    assert big_psi_truncated(d, S, imax, d * imax) == expand_truncated(
        poincare_series(d), imax, d * imax
    )
