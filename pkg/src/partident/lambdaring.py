"""Action of symmetric functions on sums of rank-1 monomials.

An element is written ``sum c*u`` where each ``u`` is a monomial in declared
rank-1 atoms and each ``c`` is a polynomial of degree at most one in a single
binomial-type symbol (``z`` by default).  Then

    psi^i[sum c u]   = sum c u^i
    lambda_t[sum c u] = prod (1 + t u)^c
    sigma_t[sum c u]  = prod (1 - t u)^(-c)

The atoms stay symbolic; concrete values (``q' = 1 + q``,
``a' = 1/(1 - a)``) are substituted into the resulting series.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .exactring import (
    Poly,
    Series,
    mono_pow,
    poly_sum,
    series_pow_symbolic,
)
from .partitions import Partition, enumerate_partitions
from .symfun import jacobi_trudi, monomial_in_power_sums


class BinomialDegreeError(ValueError):
    """A coefficient is not of degree <= 1 in the binomial-type symbol."""


T = "t"


class LambdaElement:
    __slots__ = ("poly", "binomial")

    def __init__(self, poly: "Poly | int | Fraction" = 0, binomial: str = "z"):
        poly = Poly.coerce(poly)
        if poly is NotImplemented:
            raise TypeError("LambdaElement wraps a Poly")
        self.poly = poly
        self.binomial = binomial
        for u, c in self.groups().items():
            if c.degree(binomial) > 1 or (c.variables() - {binomial}):
                raise BinomialDegreeError(
                    f"coefficient {c} of {u or 1} must be affine in {binomial}")

    @classmethod
    def atom(cls, name: str, binomial: str = "z") -> "LambdaElement":
        return cls(Poly.var(name), binomial)

    @classmethod
    def binomial_symbol(cls, binomial: str = "z") -> "LambdaElement":
        return cls(Poly.var(binomial), binomial)

    def groups(self) -> dict:
        """Atom monomial -> coefficient polynomial in the binomial symbol."""
        out: dict = {}
        b = self.binomial
        for m, c in self.poly.terms.items():
            atoms = tuple((v, e) for v, e in m if v != b)
            zpart = tuple((v, e) for v, e in m if v == b)
            out.setdefault(atoms, {})[zpart] = c
        return {u: Poly(c) for u, c in out.items()}

    def atoms(self) -> set:
        return self.poly.variables() - {self.binomial}

    def _lift(self, other):
        if isinstance(other, LambdaElement):
            if other.binomial != self.binomial:
                raise ValueError("elements use different binomial symbols")
            return other
        p = Poly.coerce(other)
        if p is NotImplemented:
            return NotImplemented
        return LambdaElement(p, self.binomial)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return LambdaElement(self.poly + other.poly, self.binomial)

    __radd__ = __add__

    def __neg__(self):
        return LambdaElement(-self.poly, self.binomial)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return LambdaElement(self.poly - other.poly, self.binomial)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return LambdaElement(self.poly * other.poly, self.binomial)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.poly == other.poly

    __hash__ = None

    def __repr__(self):
        return f"LambdaElement({self.poly})"


def psi_action(i: int, e: LambdaElement) -> LambdaElement:
    if i < 1:
        raise ValueError("Adams operations are indexed from 1")
    out = {}
    for u, c in e.groups().items():
        ui = mono_pow(u, i)
        for zm, zc in c.terms.items():
            key = tuple(sorted(ui + zm))
            out[key] = out.get(key, 0) + zc
    return LambdaElement(Poly(out), e.binomial)


def psi_mu_action(mu: Partition, e: LambdaElement) -> Poly:
    """psi^mu[e] = prod_i psi^{mu_i}[e]."""
    out = Poly.const(1)
    for part in mu:
        out = out * psi_action(part, e).poly
    return out


def _atom_value(u, subs: Mapping | None, caps: Mapping[str, int]) -> Series:
    mono = Series(Poly({u: 1}), caps)
    if not subs:
        return mono
    return mono.subs({v: subs[v] for v, _ in u if v in subs})


def _factor_order(item):
    u, _ = item
    return (len(u), u)


def _action(e: LambdaElement, t: str, caps: Mapping[str, int], subs, sign: int) -> Series:
    if t not in caps:
        raise ValueError(f"the series variable {t!r} needs a cap")
    caps = dict(caps)
    result = Series(1, caps)
    tv = Series(Poly.var(t), caps)
    for u, c in sorted(e.groups().items(), key=_factor_order):
        value = _atom_value(u, subs, caps)
        base = 1 + tv * value if sign > 0 else 1 - tv * value
        result = result * series_pow_symbolic(base, c if sign > 0 else -c)
    return result


def lambda_t_action(e: LambdaElement, t: str = T, caps: Mapping[str, int] | None = None,
                    subs: Mapping | None = None) -> Series:
    """lambda_t[e] = prod (1 + t u)^c as a truncated series."""
    return _action(e, t, caps or {t: 4}, subs, +1)


def sigma_t_action(e: LambdaElement, t: str = T, caps: Mapping[str, int] | None = None,
                   subs: Mapping | None = None) -> Series:
    """sigma_t[e] = prod (1 - t u)^(-c) as a truncated series."""
    return _action(e, t, caps or {t: 4}, subs, -1)


_RESERVED_T = "_t"


def lambda_coeffs(top: int, e: LambdaElement, subs: Mapping | None = None) -> list:
    """[Lambda^0[e], ..., Lambda^top[e]]."""
    s = lambda_t_action(e, _RESERVED_T, {_RESERVED_T: top}, subs)
    return [s.coefficient(_RESERVED_T, i) for i in range(top + 1)]


def sigma_coeffs(top: int, e: LambdaElement, subs: Mapping | None = None) -> list:
    """[S^0[e], ..., S^top[e]]."""
    s = sigma_t_action(e, _RESERVED_T, {_RESERVED_T: top}, subs)
    return [s.coefficient(_RESERVED_T, i) for i in range(top + 1)]


def lambda_coeff(i: int, e: LambdaElement, subs: Mapping | None = None) -> Poly:
    if i < 0:
        return Poly()
    return lambda_coeffs(i, e, subs)[i]


def sigma_coeff(i: int, e: LambdaElement, subs: Mapping | None = None) -> Poly:
    if i < 0:
        return Poly()
    return sigma_coeffs(i, e, subs)[i]


def _mu_product(mu, coeffs) -> Poly:
    out = Poly.const(1)
    for part in mu:
        out = out * coeffs[part]
    return out


def lambda_mu_action(mu: Partition, e: LambdaElement, subs=None) -> Poly:
    mu = Partition(mu)
    return _mu_product(mu, lambda_coeffs(mu[0] if mu else 0, e, subs))


def sigma_mu_action(mu: Partition, e: LambdaElement, subs=None) -> Poly:
    mu = Partition(mu)
    return _mu_product(mu, sigma_coeffs(mu[0] if mu else 0, e, subs))


def monomial_action(mu: Partition, e: LambdaElement) -> Poly:
    """psi_mu[e], through the expansion of psi_mu in power sums."""
    return poly_sum(psi_mu_action(nu, e) * c for nu, c in monomial_in_power_sums(mu).items())


def schur_action(mu: Partition, e: LambdaElement, subs=None) -> Poly:
    """S_mu[e] by the Jacobi-Trudi determinant in the S^k[e]."""
    mu = Partition(mu)
    top = mu[0] + len(mu) if mu else 0
    s = sigma_coeffs(top, e, subs)
    return jacobi_trudi(mu, lambda k: s[k] if 0 <= k <= top else Poly())


# ---------------------------------------------------------------------------
# q = q' - 1 with q' of rank 1
# ---------------------------------------------------------------------------

Q_ATOM = "q'"


def q_element(atom: str = Q_ATOM, binomial: str = "z") -> LambdaElement:
    return LambdaElement.atom(atom, binomial) - 1


def in_q(p: Poly, q: str = "q", atom: str = Q_ATOM) -> Poly:
    """Rewrite a polynomial in q' through q' = 1 + q."""
    return p.subs({atom: Poly.var(q) + 1})


def psi_mu_of_q(mu: Partition, q: str = "q") -> Poly:
    """psi^mu[q] for q = q' - 1, expressed in q."""
    return in_q(psi_mu_action(Partition(mu), q_element()), q)


# ---------------------------------------------------------------------------
# the sum and product rules
# ---------------------------------------------------------------------------


def sum_product_rules(P: LambdaElement, Q: LambdaElement, i: int) -> dict:
    """Named ``(lhs, rhs)`` pairs for the sum rules, product rules and S/Lambda duality."""
    out = {}
    sP, sQ, sPQsum = (sigma_coeffs(i, x) for x in (P, Q, P + Q))
    lP, lQ, lPQsum = (lambda_coeffs(i, x) for x in (P, Q, P + Q))
    out["S^i[P+Q] convolution"] = (
        sPQsum[i], poly_sum(sP[i - j] * sQ[j] for j in range(i + 1)))
    out["Lambda^i[P+Q] convolution"] = (
        lPQsum[i], poly_sum(lP[i - j] * lQ[j] for j in range(i + 1)))

    caps = {T: i}
    out["sigma_t additive"] = (
        sigma_t_action(P + Q, T, caps), sigma_t_action(P, T, caps) * sigma_t_action(Q, T, caps))
    out["lambda_t additive"] = (
        lambda_t_action(P + Q, T, caps),
        lambda_t_action(P, T, caps) * lambda_t_action(Q, T, caps))

    PQ = P * Q
    s_direct = sigma_coeff(i, PQ)
    l_direct = lambda_coeff(i, PQ)
    s_pow = s_mon = s_sch = Poly()
    l_pow = l_mon = l_sch = Poly()
    for mu in enumerate_partitions(i):
        pp = psi_mu_action(mu, P) * psi_mu_action(mu, Q) / mu.z()
        s_pow = s_pow + pp
        l_pow = l_pow + pp * (-1) ** (i - len(mu))
        m_p = monomial_action(mu, P)
        s_mon = s_mon + m_p * sigma_mu_action(mu, Q)
        l_mon = l_mon + m_p * lambda_mu_action(mu, Q)
        sp = schur_action(mu, P)
        s_sch = s_sch + sp * schur_action(mu, Q)
        l_sch = l_sch + sp * schur_action(mu.conjugate(), Q)
    out["S^i[PQ] power sums"] = (s_direct, s_pow)
    out["S^i[PQ] monomial x complete"] = (s_direct, s_mon)
    out["S^i[PQ] Schur x Schur"] = (s_direct, s_sch)
    out["Lambda^i[PQ] power sums"] = (l_direct, l_pow)
    out["Lambda^i[PQ] monomial x elementary"] = (l_direct, l_mon)
    out["Lambda^i[PQ] Schur x conjugate Schur"] = (l_direct, l_sch)
    out["S^i[P] = (-1)^i Lambda^i[-P]"] = (sP[i], lambda_coeff(i, -P) * (-1) ** i)
    return out


def check_sum_product_rules(P: LambdaElement, Q: LambdaElement, i: int) -> bool:
    return all(lhs == rhs for lhs, rhs in sum_product_rules(P, Q, i).values())


def check_rank1_scaling(u: str, Q: LambdaElement, i: int) -> bool:
    """Lambda^i[u Q] = u^i Lambda^i[Q] for a rank-1 atom ``u``."""
    lhs = lambda_coeff(i, LambdaElement.atom(u, Q.binomial) * Q)
    return lhs == lambda_coeff(i, Q) * Poly.var(u, i)


def binomial_type_table(i: int, binomial: str = "z") -> dict:
    """Closed forms for a constant c (here the binomial symbol) and a rank-1 atom u.

    Each entry maps a description to ``(engine value, closed form)``.
    """
    from .combinat import falling_factorial, rising_factorial
    from math import factorial

    c = LambdaElement.binomial_symbol(binomial)
    u = LambdaElement.atom("u", binomial)
    table = {
        "psi^i[c] = c": (psi_action(i, c).poly, Poly.var(binomial)),
        "S^i[c] = (c)_i / i!": (sigma_coeff(i, c),
                                rising_factorial(i, binomial) / factorial(i)),
        "Lambda^i[c] = [c]_i / i!": (lambda_coeff(i, c),
                                     falling_factorial(i, binomial) / factorial(i)),
        "psi^i[u] = u^i": (psi_action(i, u).poly, Poly.var("u", i)),
        "S^i[u] = u^i": (sigma_coeff(i, u), Poly.var("u", i)),
        "Lambda^i[u]": (lambda_coeff(i, u),
                        Poly.var("u") if i == 1 else Poly.const(int(i == 0))),
    }
    return table
