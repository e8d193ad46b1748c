from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from covseries.dims import (
    dim_cov,
    dim_cov_graded,
    dim_cov_qbin,
    dim_inv,
    dim_table,
    omega,
    qbinomial,
)
from covseries.poly import TPoly

from oracles import brute_dim, brute_omega, brute_omega_row


@pytest.mark.parametrize(
    "d, n, m, expected",
    [(1, 0, 0, 1), (7, 0, 0, 1), (2, 2, 2, 2), (3, 2, 2, 2), (3, 2, 1, 1), (3, 2, 3, 2)],
)
def test_omega_examples(d, n, m, expected):
    assert brute_omega(d, n, m) == expected
    assert omega(d, n, m) == expected


@pytest.mark.parametrize("m", [-1, -5, 7, 100])
def test_omega_out_of_range(m):
    assert omega(3, 2, m) == 0


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("n", range(0, 6))
def test_omega_matches_enumeration(d, n):
    row = brute_omega_row(d, n)
    assert [omega(d, n, m) for m in range(d * n + 1)] == [row[m] for m in range(d * n + 1)]


@given(st.integers(1, 12), st.integers(0, 12), st.data())
def test_omega_symmetries(d, n, data):
    m = data.draw(st.integers(0, d * n))
    assert omega(d, n, m) == omega(d, n, d * n - m)
    if n >= 1:
        assert omega(d, n, m) == omega(n, d, m)


@pytest.mark.parametrize("d", [1, 4, 9])
@pytest.mark.parametrize("n", [0, 3, 8])
def test_omega_total_mass(d, n):
    assert sum(omega(d, n, m) for m in range(d * n + 1)) == comb(n + d, d)


def test_dim_cov_examples():
    assert dim_cov(2, 1, 2) == 1
    assert dim_cov(3, 2, 2) == brute_dim(3, 2, 2) == 1
    assert dim_cov(2, 2, 0) == brute_dim(2, 2, 0) == 1


def test_dim_cov_parity_and_range():
    assert dim_cov(3, 1, 2) == 0
    assert dim_cov(2, 1, 4) == 0
    assert dim_cov(5, 0, 0) == 1


@pytest.mark.parametrize("d", range(1, 6))
def test_dim_cov_matches_enumeration(d):
    for i in range(6):
        for j in range(d * i + 1):
            assert dim_cov(d, i, j) == brute_dim(d, i, j)


def test_dim_inv_examples():
    assert dim_inv(4, 0) == 1
    assert dim_inv(2, 2) == 1
    assert brute_omega(3, 2, 3) - brute_omega(3, 2, 2) == 0
    assert dim_inv(3, 2) == 0
    # invariants of the cubic: only the discriminant, in degree 4
    assert [dim_inv(3, n) for n in range(9)] == [1, 0, 0, 0, 1, 0, 0, 0, 1]


def test_dim_cov_graded_examples():
    assert dim_cov_graded(6, 0) == 1
    assert all(dim_cov_graded(1, n) == 1 for n in range(15))
    assert sum(brute_dim(3, 2, j) for j in range(7)) == 2
    assert dim_cov_graded(3, 2) == 2


def test_qbinomial_examples():
    assert qbinomial(5, 0) == TPoly({0: 1})
    assert qbinomial(4, 1) == TPoly.from_coeffs([1] * 5)
    assert qbinomial(2, 2) == TPoly.from_coeffs([1, 1, 2, 1, 1])
    assert [brute_omega(2, 2, m) for m in range(5)] == [1, 1, 2, 1, 1]


@pytest.mark.parametrize("d", range(0, 7))
@pytest.mark.parametrize("n", range(0, 7))
def test_qbinomial_counts_omega(d, n):
    qb = qbinomial(d, n)
    if d == 0:
        assert qb == TPoly({0: 1})
    else:
        assert [qb[m] for m in range(d * n + 1)] == [omega(d, n, m) for m in range(d * n + 1)]
    assert qb.degree == d * n


def test_dim_cov_qbin_examples():
    assert dim_cov_qbin(2, 1, 2) == 1
    assert dim_cov_qbin(3, 2, 2) == 1
    assert dim_cov_qbin(7, 0, 0) == 1
    assert dim_cov_qbin(3, 2, 1) == 0


def test_dim_table_examples():
    t1 = dim_table(1, 2, 2)
    assert [[int(x) for x in row] for row in t1.entries] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    t2 = dim_table(2, 2, 2)
    assert [[int(x) for x in row] for row in t2.entries] == [[1, 0, 0], [0, 0, 1], [1, 0, 0]]


@pytest.mark.parametrize("d", range(1, 7))
def test_dim_table_invariants(d):
    t = dim_table(d, 6, 10)
    assert t[0, 0] == 1 and all(t[0, j] == 0 for j in range(1, 11))
    for i in range(7):
        for j in range(11):
            if (d * i - j) % 2 or d * i < j:
                assert t[i, j] == 0
            assert t[i, j] >= 0


def test_dim_table_csv():
    csv_text = dim_table(2, 2, 3).to_csv()
    assert csv_text.splitlines() == ["i\\j,0,1,2,3", "0,1,0,0,0", "1,0,0,1,0", "2,1,0,0,0"]


def test_rejects_zero_degree():
    with pytest.raises(ValueError):
        dim_cov(0, 1, 1)
    with pytest.raises(ValueError):
        omega(0, 1, 0)
