"""Generalized binomial coefficients of partitions and factorial polynomials."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from .exactring import Poly
from .partitions import Partition

BRUTE_FORCE_MAX_WEIGHT = 20


class OracleScaleError(ValueError):
    pass


@lru_cache(maxsize=None)
def gen_binom_row(p: Partition) -> tuple:
    """Coefficients of prod_i ((1+q)^p_i - 1), lowest degree first."""
    coeffs = [1]
    for part in p:
        factor = [0] + [comb(part, k) for k in range(1, part + 1)]
        out = [0] * (len(coeffs) + part)
        for a, ca in enumerate(coeffs):
            if ca:
                for b, cb in enumerate(factor):
                    out[a + b] += ca * cb
        coeffs = out
    return tuple(coeffs)


def gen_binom(p: Partition, r: int) -> int:
    """Number of ways to pick ``r`` cells of the diagram hitting every row."""
    row = gen_binom_row(Partition(p))
    return row[r] if 0 <= r < len(row) else 0


def gen_binom_brute(p: Partition, r: int) -> int:
    p = Partition(p)
    if p.weight > BRUTE_FORCE_MAX_WEIGHT:
        raise OracleScaleError(
            f"subset enumeration limited to weight {BRUTE_FORCE_MAX_WEIGHT}, got {p.weight}")
    if r < 0 or r > p.weight:
        return 0
    rows = set(range(1, len(p) + 1))
    return sum(1 for chosen in combinations(p.cells(), r)
               if {i for i, _ in chosen} == rows)


def _z(var: str) -> Poly:
    return Poly.var(var)


def rising_factorial(n: int, var: str = "z") -> Poly:
    """(z)_n = z (z+1) ... (z+n-1)."""
    z = _z(var)
    out = Poly.const(1)
    for i in range(n):
        out = out * (z + i)
    return out


def falling_factorial(n: int, var: str = "z") -> Poly:
    """[z]_n = z (z-1) ... (z-n+1)."""
    z = _z(var)
    out = Poly.const(1)
    for i in range(n):
        out = out * (z - i)
    return out


def binom_poly(n: int, var: str = "z") -> Poly:
    return falling_factorial(n, var) / factorial(n)


def binom_of(x: Poly, n: int) -> Poly:
    """binom(x, n) for a polynomial ``x``; zero when n < 0."""
    if n < 0:
        return Poly()
    out = Poly.const(1)
    for i in range(n):
        out = out * (x - i)
    return out / factorial(n)


def binom_int(m: int, k: int) -> Fraction:
    """[m]_k / k!, defined for negative ``m`` and zero for negative ``k``."""
    if k < 0:
        return Fraction(0)
    num = 1
    for i in range(k):
        num *= m - i
    return Fraction(num, factorial(k))
