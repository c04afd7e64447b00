"""The polynomials P_jk(X) = sum_{|mu|=j} <mu,k>/z_mu prod_i X_i^{m_i(mu)}."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .combinat import gen_binom
from .exactring import Poly, poly_sum
from .partitions import enumerate_partitions
from .symfun import Alphabet, monomial, power_sum


class MissingVariableError(ValueError):
    pass


def x_names(m: int, prefix: str = "X") -> list:
    return [f"{prefix}{i}" for i in range(1, m + 1)]


def p_jk(j: int, k: int, X: Sequence[str] | None = None) -> Poly:
    """P_jk in the variables ``X`` (default X1..Xj); P_00 = 1."""
    if j < 0 or k < 0:
        raise ValueError("j and k must be nonnegative")
    X = x_names(j) if X is None else list(X)
    if len(X) < j:
        raise MissingVariableError(f"P_{j},{k} needs X_{j} but only {len(X)} variables given")
    if k > j:
        return Poly()
    terms = {}
    for mu in enumerate_partitions(j, max_length=k):
        c = gen_binom(mu, k)
        if c:
            mono = tuple(sorted((X[i - 1], m) for i, m in mu.multiplicities().items()))
            terms[mono] = Fraction(c, mu.z())
    return Poly(terms)


def negate_x(p: Poly, X: Sequence[str]) -> Poly:
    """p(-X)."""
    return p.subs({x: -Poly.var(x) for x in X})


def p_jk_via_lemma2(j: int, k: int, A: Alphabet) -> Poly:
    """P_jk(-X) at X_i = psi^i(A), computed as (-1)^k sum_{|mu|=j, l(mu)=k} psi_mu(A)."""
    if k > j:
        return Poly()
    total = poly_sum(monomial(A, mu) for mu in enumerate_partitions(j, max_length=k)
                     if len(mu) == k)
    return total if k % 2 == 0 else -total


def p_jk_at_power_sums(j: int, k: int, A: Alphabet, negate: bool = True) -> Poly:
    """P_jk (or P_jk(-X)) with X_i replaced by the power sums of ``A``."""
    X = x_names(j)
    sign = -1 if negate else 1
    return p_jk(j, k, X).subs({x: power_sum(A, i) * sign for i, x in enumerate(X, 1)})
