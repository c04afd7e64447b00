"""Specialisation to the contents of a diagram.

For a partition ``lam`` and alpha > 0 the content of the cell (i, j) is
``j - 1 - (i - 1)/alpha``.  ``d_k`` is the k-th power sum of contents,
``F_jk = P_jk(d_1, d_2, ...)``.  Negative powers of ``y`` are written through
``w = 1/y`` so that everything stays an ordinary truncated series in ``w``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .combinat import binom_int, rising_factorial
from .exactring import Poly, Series, series_inverse
from .partitions import Partition
from .pjk import p_jk, x_names
from .report import VerificationReport, compare

W = "w"
X = "x"


def _alpha(alpha) -> Fraction:
    a = Fraction(alpha)
    if a <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return a


def contents(lam: Partition, alpha) -> list:
    """The content alphabet, one entry per cell in row order."""
    a = _alpha(alpha)
    return [Fraction(j - 1) - Fraction(i - 1) / a for i, j in Partition(lam).cells()]


def d_k(lam: Partition, alpha, k: int) -> Fraction:
    if k < 0:
        raise ValueError("k >= 0")
    return sum((c ** k for c in contents(lam, alpha)), Fraction(0))


def pochhammer_lambda(lam: Partition, alpha, shift: "Poly | str" = "z") -> Poly:
    """(shift)_lam = prod over cells of (shift + content)."""
    s = Poly.var(shift) if isinstance(shift, str) else Poly.coerce(shift)
    out = Poly.const(1)
    for c in contents(lam, alpha):
        out = out * (s + c)
    return out


@lru_cache(maxsize=None)
def _p_jk_cached(j: int, k: int):
    return p_jk(j, k, x_names(j))


def f_jk(lam: Partition, alpha, j: int, k: int) -> Fraction:
    """P_jk evaluated at X_i = d_i(lam)."""
    if j < 0 or k < 0:
        raise ValueError("j, k >= 0")
    values = {f"X{i}": d_k(lam, alpha, i) for i in range(1, j + 1)}
    return _p_jk_cached(j, k).evaluate(values)


def inner_sum(lam: Partition, alpha, i: int, j: int) -> Fraction:
    """sum_{k <= min(i, j)} C(|lam| - j, i - k) F_jk(lam)."""
    n = Partition(lam).weight
    return sum((binom_int(n - j, i - k) * f_jk(lam, alpha, j, k)
                for k in range(min(i, j) + 1)), Fraction(0))


def theorem4_lhs(lam: Partition, alpha, cap_w: int, cap_x: int | None = None) -> Series:
    """(y-x)_lam / (y)_lam = prod(1 + (c - x) w) / prod(1 + c w)."""
    caps = {W: cap_w}
    if cap_x is not None:
        caps[X] = cap_x
    w, x = Poly.var(W), Poly.var(X)
    num = Series(1, caps)
    den = Series(1, caps)
    for c in contents(lam, alpha):
        num = num * Series(1 + (x * -1 + c) * w, caps)
        den = den * Series(1 + w * c, caps)
    return num * series_inverse(den)


def theorem4_rhs(lam: Partition, alpha, cap_w: int, cap_x: int | None = None) -> Series:
    """sum_{i+j <= cap_w} (-1)^(i+j) x^i w^(i+j) sum_k C(|lam|-j, i-k) F_jk."""
    caps = {W: cap_w}
    if cap_x is not None:
        caps[X] = cap_x
    total = Poly()
    for i in range(cap_w + 1):
        if cap_x is not None and i > cap_x:
            break
        for j in range(cap_w - i + 1):
            c = inner_sum(lam, alpha, i, j)
            if c:
                sign = -1 if (i + j) % 2 else 1
                total = total + Poly({((W, i + j), (X, i)): c * sign})
    return Series(total, caps)


def verify_theorem4(lam: Partition, alpha, cap_w: int = 6,
                    cap_x: int | None = None) -> VerificationReport:
    """Exact equality of both sides; ``x`` stays exact unless ``cap_x`` is given.

    Also checks that the left side has degree at most |lam| in x.
    """
    lam = Partition(lam)
    if cap_x is not None and cap_x < lam.weight:
        raise ValueError(f"x-cap {cap_x} is below |lambda| = {lam.weight}")
    cache: dict = {}

    def lhs():
        if "lhs" not in cache:
            cache["lhs"] = theorem4_lhs(lam, alpha, cap_w, cap_x)
        return cache["lhs"]

    def degree_bound():
        s = lhs()
        high = Poly({m: c for m, c in s.poly.terms.items() if dict(m).get(X, 0) > lam.weight})
        return high, 0

    params = {"partition": str(lam), "alpha": str(Fraction(alpha)), "w_cap": cap_w}
    if cap_x is not None:
        params["x_cap"] = cap_x
    return compare("theorem4", params, [
        ("lhs = rhs", lambda: (lhs(), theorem4_rhs(lam, alpha, cap_w, cap_x))),
        ("x-degree of lhs <= |lambda|", degree_bound),
    ])


def verify_vanishing(lam: Partition, alpha, i_range, j_range) -> VerificationReport:
    """sum_k C(|lam|-j, i-k) F_jk(lam) = 0 for every i > |lam|."""
    lam = Partition(lam)
    i_range, j_range = list(i_range), list(j_range)
    bad = [i for i in i_range if i <= lam.weight]
    if bad:
        raise ValueError(f"vanishing needs i > |lambda| = {lam.weight}, got {bad}")
    pairs = [
        (f"i={i} j={j}", lambda i=i, j=j: (inner_sum(lam, alpha, i, j), 0))
        for i in i_range for j in j_range
    ]
    params = {"partition": str(lam), "alpha": str(Fraction(alpha)),
              "i": [min(i_range), max(i_range)] if i_range else [],
              "j": [min(j_range), max(j_range)] if j_range else []}
    return compare("vanishing", params, pairs)


def _rising_ratio_in_w(n: int, cap_w: int) -> Series:
    """(y-x)_n / (y)_n from the rising factorial polynomial, written in w = 1/y."""
    caps = {W: cap_w}
    w, x = Poly.var(W), Poly.var(X)
    R = rising_factorial(n, "Y")
    num = Poly()
    den = Poly()
    # y^k = w^(n-k) after clearing w^n from numerator and denominator
    for k in range(n + 1):
        c = R.coeff({"Y": k})
        if c:
            num = num + (1 - x * w) ** k * w ** (n - k) * c
            den = den + w ** (n - k) * c
    return Series(num, caps) * series_inverse(Series(den, caps))


def chu_vandermonde_demo(n: int, cap_w: int = 6, alphas=(1, 2, Fraction(1, 2))) -> VerificationReport:
    """The row partition (n): theorem 4 against the classical rising-factorial ratio.

    The row has contents 0..n-1 whatever alpha is; every alpha is checked.
    """
    if n < 1:
        raise ValueError("n >= 1")
    lam = Partition((n,))
    classical = _rising_ratio_in_w(n, cap_w)
    pairs = [("contents are 0..n-1",
              lambda: (Poly.const(int(contents(lam, alphas[0]) == list(range(n)))), 1))]
    for a in alphas:
        pairs.append((f"alpha={a}: lhs = classical ratio",
                      lambda a=a: (theorem4_lhs(lam, a, cap_w), classical)))
        pairs.append((f"alpha={a}: rhs = classical ratio",
                      lambda a=a: (theorem4_rhs(lam, a, cap_w), classical)))
    return compare("chu-vandermonde", {"n": n, "w_cap": cap_w}, pairs)
