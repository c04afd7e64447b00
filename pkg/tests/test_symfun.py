from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from partident.exactring import Poly
from partident.partitions import Partition, enumerate_partitions, partitions_up_to
from partident.symfun import (
    Alphabet,
    alternant,
    check_cauchy,
    check_kernel_expansions,
    complete,
    complete_all,
    determinant,
    elementary,
    elementary_all,
    kernel_expansions,
    monomial,
    monomial_in_power_sums,
    mu_indexed,
    power_sum,
    schur,
    subset_product_expand,
)

A3 = Alphabet.formal(3)
A4 = Alphabet.formal(4)


def test_small_values():
    a1, a2, a3 = A3.letters
    assert elementary(A3, 2) == a1 * a2 + a1 * a3 + a2 * a3
    assert elementary(A3, 4) == 0
    assert complete(A3, 0) == 1 and elementary(A3, 0) == 1
    assert power_sum(A3, 0) == 3
    assert power_sum(A3, 2) == a1 ** 2 + a2 ** 2 + a3 ** 2
    assert monomial(A3, Partition((2, 1))) == schur(A3, Partition((2, 1))) - 2 * a1 * a2 * a3


@pytest.mark.parametrize("n", range(1, 7))
def test_newton_identities(n):
    e, h = elementary_all(A4, n), complete_all(A4, n)
    p = [power_sum(A4, k) for k in range(n + 1)]
    assert n * e[n] == sum(((-1) ** (k - 1) * e[n - k] * p[k] for k in range(1, n + 1)), Poly())
    assert n * h[n] == sum((h[n - k] * p[k] for k in range(1, n + 1)), Poly())
    assert sum(((-1) ** k * e[k] * h[n - k] for k in range(n + 1)), Poly()) == 0


def test_schur_against_alternant():
    A5 = Alphabet.formal(5)
    delta = [4, 3, 2, 1, 0]
    a_delta = alternant(A5, delta)
    for mu in partitions_up_to(5):
        padded = list(mu) + [0] * (5 - len(mu))
        a_mu = alternant(A5, [m + d for m, d in zip(padded, delta)])
        assert a_delta * schur(A5, mu) == a_mu, mu


def test_schur_rows_columns_and_vanishing():
    for n in range(5):
        assert schur(A4, Partition((n,)) if n else Partition()) == complete(A4, n)
        assert schur(A4, Partition((1,) * n)) == elementary(A4, n)
    assert schur(A3, Partition((1, 1, 1, 1))) == 0


def test_monomial_to_power_sums():
    for n in range(1, 6):
        for mu in enumerate_partitions(n):
            expansion = monomial_in_power_sums(mu)
            rebuilt = sum((c * prod((power_sum(A4, k) for k in nu), start=Poly.const(1))
                           for nu, c in expansion.items()), Poly())
            assert rebuilt == monomial(A4, mu), mu


def test_determinant():
    assert determinant([]) == 1
    assert determinant([[2, 1], [7, 4]]) == 1
    m = [[Fraction(i + j * j + (i == j)) for j in range(4)] for i in range(4)]
    # swapping two rows negates
    assert determinant([m[1], m[0]] + m[2:]) == -determinant(m)


@given(st.lists(rationals, min_size=1, max_size=4), st.integers(0, 4))
def test_numeric_alphabet_and_symmetry(values, i):
    A = Alphabet.numeric(values)
    B = Alphabet.numeric(list(reversed(values)))
    for mu in enumerate_partitions(i):
        for basis in ("elementary", "complete", "power_sum"):
            assert mu_indexed(basis, A, mu) == mu_indexed(basis, B, mu)
        assert monomial(A, mu) == monomial(B, mu)
        assert schur(A, mu) == schur(B, mu)
    assert power_sum(A, i) == sum(Fraction(v) ** i for v in values)


def test_alphabet_product():
    A, B = Alphabet.formal(2, "a"), Alphabet.formal(2, "b")
    AB = A.times(B)
    assert len(AB) == 4
    for k in range(4):
        assert power_sum(AB, k) == power_sum(A, k) * power_sum(B, k)


@pytest.mark.parametrize("size", [3, 4, 5, 6])
def test_cauchy(size):
    A = Alphabet.formal(size)
    for i in range(7):
        assert check_cauchy(i, A)


@pytest.mark.parametrize("p,r", [(2, 2), (2, 3), (3, 3)])
def test_kernel_expansions(p, r):
    A, B = Alphabet.formal(p, "a"), Alphabet.formal(r, "b")
    for i in range(5):
        assert check_kernel_expansions(i, A, B)
    exp = kernel_expansions(2, A, B)
    assert exp["S direct"] == complete(A.times(B), 2)
    assert exp["Lambda direct"] == elementary(A.times(B), 2)


def test_kernel_detects_a_sign_error():
    A, B = Alphabet.formal(2, "a"), Alphabet.formal(2, "b")
    exp = kernel_expansions(2, A, B)
    assert exp["S via Schur"] != exp["Lambda direct"]


@pytest.mark.parametrize("p", range(5))
def test_subset_product(p):
    A = Alphabet.formal(p)
    for n in range(p + 2):
        res = subset_product_expand(A, "v", "y", n, 5)
        assert res.equal
    assert subset_product_expand(A, "v", "y", p + 1, 5).lhs == 0
