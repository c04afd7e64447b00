from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from partident import application as app
from partident.exactring import Poly, Series
from partident.partitions import Partition, enumerate_partitions
from partident.sweeps import THEOREM4_ALPHAS, THEOREM4_PARTITIONS

z, x, w = Poly.var("z"), Poly.var("x"), Poly.var("w")
alphas = st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=4)
small = st.integers(1, 4).flatmap(lambda n: st.sampled_from(list(enumerate_partitions(n))))


def test_contents_and_dk():
    assert app.d_k(Partition((1,)), 3, 1) == 0
    assert app.d_k(Partition((2,)), 5, 1) == 1
    assert app.d_k(Partition((1, 1)), 2, 1) == Fraction(-1, 2)
    assert app.contents(Partition((2, 1)), 2) == [0, 1, Fraction(-1, 2)]
    assert app.d_k(Partition((2, 1)), 1, 0) == 3


def test_alpha_must_be_positive():
    with pytest.raises(ValueError):
        app.d_k(Partition((1,)), 0, 1)
    with pytest.raises(ValueError):
        app.contents(Partition((1,)), Fraction(-1, 2))


def test_pochhammer():
    assert app.pochhammer_lambda(Partition((1,)), 1) == z
    assert app.pochhammer_lambda(Partition((2,)), 1) == z * (z + 1)
    assert app.pochhammer_lambda(Partition((1, 1)), 1) == z * (z - 1)
    assert app.pochhammer_lambda(Partition((1, 1)), 2, shift=x) == x * (x - Fraction(1, 2))


def test_fjk_small():
    lam = Partition((2, 1))
    # F_j1 = d_j, F_00 = 1
    for j in range(1, 5):
        assert app.f_jk(lam, 2, j, 1) == app.d_k(lam, 2, j)
    assert app.f_jk(lam, 2, 0, 0) == 1


def test_theorem4_single_cell():
    assert app.theorem4_lhs(Partition((1,)), 1, 4).poly == 1 - x * w
    assert app.theorem4_rhs(Partition((1,)), 1, 4).poly == 1 - x * w


@pytest.mark.parametrize("lam", THEOREM4_PARTITIONS)
@pytest.mark.parametrize("alpha", THEOREM4_ALPHAS)
def test_theorem4_grid(lam, alpha):
    lam = Partition(lam)
    assert app.verify_theorem4(lam, alpha, 6).passed
    assert app.verify_theorem4(lam, alpha, 6, cap_x=lam.weight + 2).passed


def test_lhs_clears_denominator():
    lam = Partition((2, 1))
    caps = {"w": 6}
    lhs = app.theorem4_lhs(lam, 2, 6)
    # (y - x)_lam w^|lam| = prod(1 + (c - x) w)
    num = Poly.const(1)
    den = Poly.const(1)
    for c in app.contents(lam, 2):
        num = num * (1 + (c - x) * w)
        den = den * (1 + c * w)
    assert lhs * Series(den, caps) == Series(num, caps)


def test_x_cap_below_weight_rejected():
    with pytest.raises(ValueError):
        app.verify_theorem4(Partition((2, 1)), 1, 6, cap_x=2)


@given(small, alphas)
def test_theorem4_random_alpha(lam, alpha):
    assert app.theorem4_lhs(lam, alpha, 5) == app.theorem4_rhs(lam, alpha, 5)
    assert app.theorem4_lhs(lam, alpha, 5).poly.degree("x") <= lam.weight


def test_vanishing_examples():
    assert app.inner_sum(Partition((1,)), 1, 2, 0) == 0
    assert app.inner_sum(Partition((2,)), 1, 3, 1) == 0
    assert app.verify_vanishing(Partition((2, 1)), 2, [4, 5], range(5)).passed
    with pytest.raises(ValueError):
        app.verify_vanishing(Partition((2, 1)), 2, [3, 4], range(5))


def test_inner_sum_nonzero_below_threshold():
    # the sum is the x^i w^(i+j) coefficient, which is generically nonzero for i <= |lam|
    assert app.inner_sum(Partition((2, 1)), 2, 3, 0) != 0


def test_row_partitions_independent_of_alpha():
    for n in range(1, 5):
        lam = Partition((n,))
        assert app.contents(lam, 1) == list(range(n)) == app.contents(lam, Fraction(1, 3))
        for j in range(4):
            for k in range(j + 1):
                assert app.f_jk(lam, 1, j, k) == app.f_jk(lam, 7, j, k)


def test_chu_vandermonde():
    for n in range(1, 5):
        assert app.chu_vandermonde_demo(n).passed
    assert app.chu_vandermonde_demo(1, 4).passed
    with pytest.raises(ValueError):
        app.chu_vandermonde_demo(0)
