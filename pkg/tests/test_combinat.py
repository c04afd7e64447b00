from fractions import Fraction
from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from partident.combinat import (
    OracleScaleError,
    binom_int,
    binom_of,
    binom_poly,
    falling_factorial,
    gen_binom,
    gen_binom_brute,
    rising_factorial,
)
from partident.exactring import Poly
from partident.partitions import Partition, partitions_up_to

z = Poly.var("z")


def test_gen_binom_examples():
    assert gen_binom(Partition((2, 1)), 2) == 2
    assert gen_binom(Partition((2, 1)), 3) == 1
    assert gen_binom(Partition((2, 1)), 1) == 0
    assert gen_binom(Partition(), 0) == 1
    assert gen_binom(Partition((3,)), 2) == 3
    assert gen_binom(Partition((2, 2)), 5) == 0


def test_gen_binom_against_brute_force():
    for lam in partitions_up_to(8):
        for r in range(-1, lam.weight + 2):
            assert gen_binom(lam, r) == gen_binom_brute(lam, r), (lam, r)


def test_generating_function():
    # prod((1+q)^lam_i - 1)
    q = Poly.var("q")
    for lam in partitions_up_to(6):
        gf = prod(((1 + q) ** p - 1 for p in lam), start=Poly.const(1))
        assert all(gf.coefficient_of("q", r) == gen_binom(lam, r) for r in range(lam.weight + 1))


def test_sum_rule():
    for lam in partitions_up_to(10):
        assert sum(gen_binom(lam, r) for r in range(lam.weight + 1)) == prod(2 ** p - 1 for p in lam)


def test_brute_force_scale_guard():
    with pytest.raises(OracleScaleError):
        gen_binom_brute(Partition((21,)), 3)


@given(st.integers(0, 7), st.integers(-3, 9))
def test_binom_poly_at_integers(n, m):
    assert binom_poly(n).evaluate({"z": m}) == binom_int(m, n)
    if m >= 0:
        assert binom_int(m, n) == comb(m, n)


def test_binom_int_edges():
    assert binom_int(-1, 3) == -1
    assert binom_int(-2, 2) == 3
    assert binom_int(5, -1) == 0
    assert binom_int(2, 5) == 0


@given(st.integers(0, 6), st.integers(0, 6))
def test_factorial_identities(n, k):
    assert rising_factorial(n) == falling_factorial(n).subs({"z": z + n - 1})
    assert rising_factorial(n + k) == rising_factorial(n) * rising_factorial(k).subs({"z": z + n})
    # Vandermonde for polynomial binomials
    w = Poly.var("w")
    lhs = binom_of(z + w, n)
    rhs = sum((binom_of(z, i) * binom_of(w, n - i) for i in range(n + 1)), Poly())
    assert lhs == rhs


def test_binom_of_negative_index():
    assert binom_of(z, -1) == 0
    assert binom_of(z - 2, 2) == (z - 2) * (z - 3) / 2
    assert binom_poly(2) == (z * z - z) / Fraction(2)
