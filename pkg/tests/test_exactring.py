from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import polys, rationals
from partident.exactring import (
    ClassingConflictError,
    NotInvertibleError,
    Poly,
    Series,
    SeriesDomainError,
    geometric,
    render,
    series_exp,
    series_inverse,
    series_log,
    series_pow_symbolic,
)

t, x, z = Poly.var("t"), Poly.var("x"), Poly.var("z")
CAPS = {"t": 5}


def naive_log(s: Series) -> Series:
    """Mercator sum log(1+h) = sum (-1)^(k+1) h^k / k, stopped by the cap."""
    h = s - 1
    out = Series(0, s.caps)
    power = Series(1, s.caps)
    for k in range(1, sum(s.caps.values()) + 1):
        power = power * h
        out = out + power * Fraction((-1) ** (k + 1), k)
    return out


def naive_exp(s: Series) -> Series:
    out = Series(1, s.caps)
    term = Series(1, s.caps)
    for k in range(1, sum(s.caps.values()) + 1):
        term = term * s / k
        out = out + term
    return out


# --- Poly ------------------------------------------------------------------

def test_render_canonical():
    assert str(Poly()) == "0"
    assert str(x * Fraction(1, 2) - 3) == "-3 + 1/2*x"
    assert str(Poly.var("X1") ** 2 / 2 + Poly.var("X2") / 2) == "1/2*X1^2 + 1/2*X2"
    assert render({(("a", 1),): Fraction(-1)}) == "-a"


def test_zero_coefficients_dropped():
    assert (x - x).is_zero()
    assert Poly({(("x", 1),): 0}) == Poly()
    assert Poly({(("x", 0),): 2}) == 2


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Poly({(("x", -1),): 1})


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0
    assert p * 1 == p and p + 0 == p


@given(polys(), st.integers(0, 4))
def test_pow_is_repeated_mul(p, n):
    out = Poly.const(1)
    for _ in range(n):
        out = out * p
    assert p ** n == out


@given(polys(), rationals, rationals)
def test_evaluate_is_a_homomorphism(p, a, b):
    vals = {"a": a, "b": b, "t": a - b}
    q = p * p + 3 * p
    pv = p.evaluate(vals)
    assert q.evaluate(vals) == pv * pv + 3 * pv


def test_subs_and_coefficients():
    p = (1 + x) ** 3
    assert p.coefficient_of("x", 2) == 3
    assert p.degree("x") == 3 and Poly().degree() == -1
    assert p.subs({"x": t + 1}) == (2 + t) ** 3
    assert p.coeff({"x": 1}) == 3


def test_hash_consistent():
    assert hash(x + 1) == hash(1 + x)
    assert len({x + 1, 1 + x, x}) == 2


# --- Series -------------------------------------------------------------------

def test_truncation():
    s = Series((1 + t) ** 8, {"t": 3})
    assert s.poly == 1 + 8 * t + 28 * t ** 2 + 56 * t ** 3


@given(polys(), polys())
def test_truncation_is_a_morphism(p, q):
    caps = {"t": 2, "a": 1}
    assert Series(p * q, caps) == Series(p, caps) * Series(q, caps)
    assert Series(p + q, caps) == Series(p, caps) + Series(q, caps)


def test_profile_is_pointwise_min():
    s = Series(1 + t, {"t": 4}) * Series(1 + t, {"t": 1})
    assert s.caps == {"t": 1}
    assert s.poly == 1 + 2 * t


def test_bare_poly_adopts_caps():
    s = Series(1, {"t": 2}) * (1 + t) ** 5
    assert s.poly == 1 + 5 * t + 10 * t ** 2


def test_classing_conflict():
    with pytest.raises(ClassingConflictError):
        Series(t, {"t": 2}) + Series(t, {"x": 2})


def test_equality_up_to_common_profile():
    assert Series(1 + t + t ** 3, {"t": 2}) == Series(1 + t, {"t": 4})


@pytest.mark.parametrize("cap", [0, 1, 4])
def test_inverse_of_one_minus_t(cap):
    inv = series_inverse(Series(1 - t, {"t": cap}))
    assert inv.poly == sum((t ** k for k in range(cap + 1)), Poly())
    assert geometric("t", {"t": cap}) == inv


def test_not_invertible():
    with pytest.raises(NotInvertibleError):
        series_inverse(Series(t, CAPS))
    with pytest.raises(NotInvertibleError):
        series_inverse(Series(x + t, CAPS))
    with pytest.raises(ZeroDivisionError):
        Series(t, CAPS) ** -1


def test_domain_errors():
    with pytest.raises(SeriesDomainError):
        series_log(Series(2 + t, CAPS))
    with pytest.raises(SeriesDomainError):
        series_exp(Series(1 + t, CAPS))
    with pytest.raises(SeriesDomainError):
        series_pow_symbolic(Series(2 + t, CAPS), z)


def test_log_example():
    expected = sum((t ** k * Fraction((-1) ** (k + 1), k) for k in range(1, 5)), Poly())
    assert series_log(Series(1 + t, {"t": 4})).poly == expected


def test_symbolic_power_is_binomial():
    s = series_pow_symbolic(Series(1 + t, {"t": 4}), z)
    from partident.combinat import binom_poly
    for k in range(5):
        assert s.poly.coefficient_of("t", k) == binom_poly(k)


series_polys = polys(names=("a", "t"), max_terms=4, max_exp=3)


@given(series_polys)
def test_log_exp_inverse_round_trips(p):
    caps = {"a": 2, "t": 3}
    h = Series(p, caps) - Series(p, caps).constant_part()
    one_plus = 1 + h
    assert series_exp(series_log(one_plus)) == one_plus
    assert series_log(series_exp(h)) == h
    assert series_inverse(one_plus) * one_plus == 1
    assert series_log(one_plus) == naive_log(one_plus)
    assert series_exp(h) == naive_exp(h)


@given(series_polys, st.integers(-3, 5))
def test_integer_powers_match_symbolic(p, n):
    caps = {"a": 2, "t": 2}
    s = 1 + (Series(p, caps) - Series(p, caps).constant_part())
    assert series_pow_symbolic(s, n) == s ** n


@given(series_polys)
def test_symbolic_power_adds_exponents(p):
    caps = {"a": 1, "t": 2}
    s = 1 + (Series(p, caps) - Series(p, caps).constant_part())
    w = Poly.var("w")
    assert series_pow_symbolic(s, z) * series_pow_symbolic(s, w) == series_pow_symbolic(s, z + w)


def test_power_with_exact_coefficients():
    # (1 + x t)^z keeps x exact
    s = series_pow_symbolic(Series(1 + x * t, {"t": 3}), z)
    assert s.coefficient("t", 2) == x ** 2 * (z * z - z) / 2
    assert s.poly_vars() == {"x", "z"}


def test_subs_and_rescale():
    s = geometric("t", {"t": 3})
    assert s.rescale("t", -1) == series_inverse(Series(1 + t, {"t": 3}))
    assert comb(5, 2) == (Series(1 + t, {"t": 2}) ** 5).coefficient("t", 2)
