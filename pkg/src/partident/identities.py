"""Verifiers for the partition identities, as exact equalities of truncated series.

Variables: ``z`` (binomial type, exact), ``u`` (truncated), ``X1..Xm`` (exact),
and for the generating-function form ``t`` and ``q`` (truncated).  The rank-1
atoms used by the lambda-ring computation are ``q'`` and ``a1'..ap'``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb
from typing import Sequence

from .combinat import binom_int, binom_of, gen_binom
from .exactring import Poly, Series, series_inverse, series_pow_symbolic
from .lambdaring import LambdaElement, Q_ATOM, lambda_t_action
from .partitions import enumerate_partitions
from .pjk import MissingVariableError, negate_x, p_jk, x_names
from .report import PASS, VerificationReport, compare
from .symfun import Alphabet, monomial, power_sum

Z = "z"
U = "u"


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _x_vars(X, cap_u: int) -> list:
    X = x_names(cap_u) if X is None else list(X)
    if cap_u > len(X):
        raise MissingVariableError(f"u-cap {cap_u} needs X1..X{cap_u}, got {len(X)} variables")
    return X


def _shifted_factor(i: int, X: Sequence[str], u: str, cap_u: int, sign: int = 1) -> Series:
    """z + sign * sum_{k>=1} u^k (i)_k/k! X_k, truncated at u^cap_u."""
    p = Poly.var(Z)
    for k in range(1, cap_u + 1):
        # (i)_k / k! = C(i+k-1, k)
        p = p + Poly.var(u, k) * Poly.var(X[k - 1]) * (sign * comb(i + k - 1, k))
    return Series(p, {u: cap_u})


def _lhs_sum(n: int, weight, X, u: str, cap_u: int, sign: int = 1) -> Series:
    caps = {u: cap_u}
    factors: dict = {}
    total = Series(0, caps)
    for mu in enumerate_partitions(n):
        c = weight(mu)
        if not c:
            continue
        term = Series(c, caps)
        for i, m in mu.multiplicities().items():
            if i not in factors:
                factors[i] = _shifted_factor(i, X, u, cap_u, sign)
            term = term * factors[i] ** m
        total = total + term
    return total


def theorem1_lhs(n: int, r: int, cap_u: int, X: Sequence[str] | None = None,
                 u: str = U) -> Series:
    """sum_{|mu|=n} (-1)^{r-l} <mu,r>/z_mu prod_i (z + sum_k u^k (i)_k/k! X_k)^{m_i}."""
    X = _x_vars(X, cap_u)
    return _lhs_sum(
        n, lambda mu: Fraction(_sign(r - len(mu)) * gen_binom(mu, r), mu.z()),
        X, u, cap_u)


def theorem1_rhs(n: int, r: int, cap_u: int, X: Sequence[str] | None = None,
                 u: str = U) -> Series:
    """sum_j u^j C(n+j-1, n-r) sum_{k<=min(r,j)} C(z-j, r-k) P_jk(X)."""
    X = _x_vars(X, cap_u)
    z = Poly.var(Z)
    total = Poly()
    for j in range(cap_u + 1):
        outer = binom_int(n + j - 1, n - r)
        if not outer:
            continue
        inner = Poly()
        for k in range(min(r, j) + 1):
            inner = inner + binom_of(z - j, r - k) * p_jk(j, k, X)
        total = total + inner * Poly.var(u, j) * outer
    return Series(total, {u: cap_u})


def theorem2_lhs(n: int, cap_u: int, X: Sequence[str] | None = None, u: str = U) -> Series:
    X = _x_vars(X, cap_u)
    return _lhs_sum(n, lambda mu: Fraction(_sign(n - len(mu)), mu.z()), X, u, cap_u)


def theorem2_rhs(n: int, cap_u: int, X: Sequence[str] | None = None, u: str = U) -> Series:
    X = _x_vars(X, cap_u)
    z = Poly.var(Z)
    total = Poly()
    for j in range(cap_u + 1):
        inner = Poly()
        for k in range(min(n, j) + 1):
            inner = inner + binom_of(z - j, n - k) * p_jk(j, k, X)
        total = total + inner * Poly.var(u, j)
    return Series(total, {u: cap_u})


def _zero_x(s: Series, X) -> Series:
    return s.subs({x: 0 for x in X})


def x_zero_closed_form(n: int, r: int) -> Poly:
    """Both sides of the first identity at X = 0: C(n-1, n-r) C(z, r)."""
    return binom_of(Poly.var(Z), r) * binom_int(n - 1, n - r)


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


def verify_theorem1_case(n: int, r: int, cap_u: int) -> VerificationReport:
    X = x_names(cap_u)
    pairs = [("lhs = rhs", lambda: (theorem1_lhs(n, r, cap_u, X), theorem1_rhs(n, r, cap_u, X)))]
    if r > n:
        pairs = [
            ("lhs vanishes", lambda: (theorem1_lhs(n, r, cap_u, X), 0)),
            ("rhs vanishes", lambda: (theorem1_rhs(n, r, cap_u, X), 0)),
        ]
    elif r == n:
        pairs += [
            ("lhs vanishes at r = n+1", lambda: (theorem1_lhs(n, n + 1, cap_u, X), 0)),
            ("rhs vanishes at r = n+1", lambda: (theorem1_rhs(n, n + 1, cap_u, X), 0)),
        ]
    return compare("theorem1", {"n": n, "r": r, "u_cap": cap_u}, pairs)


def _run_cases(fn, cases, jobs: int) -> list:
    if jobs and jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, *zip(*cases)))
    return [fn(*c) for c in cases]


def verify_theorem1(n_max: int, cap_u: int, jobs: int = 1) -> list:
    """One report per 1 <= r <= n <= n_max, in (n, r) order."""
    cases = [(n, r, cap_u) for n in range(1, n_max + 1) for r in range(1, n + 1)]
    return _run_cases(verify_theorem1_case, cases, jobs)


def verify_theorem2_case(n: int, cap_u: int) -> list:
    X = x_names(cap_u)
    params = {"n": n, "u_cap": cap_u}
    cache: dict = {}

    def sides():
        if not cache:
            cache["l2"] = theorem2_lhs(n, cap_u, X)
            cache["r2"] = theorem2_rhs(n, cap_u, X)
        return cache["l2"], cache["r2"]

    reports = [compare("theorem2", params, [("lhs = rhs", sides)])]
    reports.append(compare("theorem2 = theorem1 at r=n", params, [
        ("lhs", lambda: (sides()[0], theorem1_lhs(n, n, cap_u, X))),
        ("rhs", lambda: (sides()[1], theorem1_rhs(n, n, cap_u, X))),
    ]))
    closed = x_zero_closed_form(n, n)
    reports.append(compare("theorem2 at X=0", params, [
        ("lhs", lambda: (_zero_x(sides()[0], X), closed)),
        ("rhs", lambda: (_zero_x(sides()[1], X), closed)),
    ]))
    return reports


def verify_theorem2(n_max: int, cap_u: int, jobs: int = 1) -> list:
    cases = [(n, cap_u) for n in range(1, n_max + 1)]
    return [r for group in _run_cases(verify_theorem2_case, cases, jobs) for r in group]


def verify_x_zero(n_max: int, cap_u: int = 2) -> list:
    """X = 0 degeneration of the first identity for every 1 <= r <= n <= n_max."""
    out = []
    X = x_names(cap_u)
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            closed = x_zero_closed_form(n, r)
            out.append(compare("theorem1 at X=0", {"n": n, "r": r}, [
                ("lhs", lambda n=n, r=r, c=closed: (_zero_x(theorem1_lhs(n, r, cap_u, X), X), c)),
                ("rhs", lambda n=n, r=r, c=closed: (_zero_x(theorem1_rhs(n, r, cap_u, X), X), c)),
            ]))
    return out


# ---------------------------------------------------------------------------
# binomial series
# ---------------------------------------------------------------------------


def binomial_series_lemma(j: int, cap_t: int, t: str = "t") -> bool:
    """sum_{i>=j} C(i-1, j-1) t^(i-j) = (1-t)^(-j), truncated at t^cap_t."""
    if j < 1:
        raise ValueError("j >= 1")
    caps = {t: cap_t}
    lhs = Series(sum((Poly.var(t, i - j) * comb(i - 1, j - 1)
                      for i in range(j, j + cap_t + 1)), Poly()), caps)
    rhs = series_inverse(Series(1 - Poly.var(t), caps)) ** j
    return lhs == rhs


def shifted_binomial_series(r: int, weight: int, cap_t: int, t: str = "t") -> bool:
    """sum_{n>=r} (-t)^n C(n+weight-1, n-r) = (-t)^r / (1+t)^(weight+r)."""
    caps = {t: cap_t}
    lhs = Series(sum((Poly.var(t, n) * ((-1) ** n * binom_int(n + weight - 1, n - r))
                      for n in range(r, cap_t + 1)), Poly()), caps)
    rhs = Series(Poly.var(t, r) * (-1) ** r, caps) * series_inverse(
        Series(1 + Poly.var(t), caps)) ** (weight + r)
    return lhs == rhs


# ---------------------------------------------------------------------------
# the lambda_t[qB] form
# ---------------------------------------------------------------------------


def _as_alphabet(A) -> Alphabet:
    return Alphabet.formal(A) if isinstance(A, int) else A


def _t3_caps(names, caps, u: str | None = None, cap_u: int | None = None) -> dict:
    cap_t, cap_q, cap_a = caps
    out = {"t": cap_t, "q": cap_q}
    out.update({a: cap_a for a in names})
    if u is not None:
        out[u] = cap_u
    return out


def _letter(name: str, u: str | None) -> Poly:
    a = Poly.var(name)
    return a * Poly.var(u) if u else a


def qB_element(names: Sequence[str]) -> LambdaElement:
    """q B with q = q' - 1 and B = z + sum_a (1 - a')."""
    q = LambdaElement.atom(Q_ATOM) - 1
    B = LambdaElement.binomial_symbol(Z)
    for a in names:
        B = B + 1 - LambdaElement.atom(f"{a}'")
    return q * B


def theorem3_lhs(A, caps=(3, 3, 3), u: str | None = None, cap_u: int | None = None) -> Series:
    """lambda_t[qB] via the action engine, then q' = 1+q and a' = 1/(1-a)."""
    names = _as_alphabet(A).names()
    sc = _t3_caps(names, caps, u, cap_u)
    subs = {Q_ATOM: Poly.var("q") + 1}
    for a in names:
        subs[f"{a}'"] = series_inverse(Series(1 - _letter(a, u), sc))
    return lambda_t_action(qB_element(names), "t", sc, subs)


def _y_and_friends(sc: dict):
    t = Series(Poly.var("t"), sc)
    q = Series(Poly.var("q"), sc)
    inv_1pt = series_inverse(1 + t)
    y = -(q * t) * inv_1pt
    return t, q, inv_1pt, y


def theorem3_closed_form(A, caps=(3, 3, 3), u: str | None = None,
                         cap_u: int | None = None) -> Series:
    """(1-y)^z prod_a (1-y)(1+t-a)/(1+t(1+q)-a)."""
    names = _as_alphabet(A).names()
    sc = _t3_caps(names, caps, u, cap_u)
    t, q, _, y = _y_and_friends(sc)
    one_minus_y = 1 - y
    out = series_pow_symbolic(one_minus_y, Poly.var(Z))
    for a in names:
        av = Series(_letter(a, u), sc)
        out = out * one_minus_y * (1 + t - av) * series_inverse(1 + t * (1 + q) - av)
    return out


def theorem3_nu_range(p: int, caps=(3, 3, 3)) -> list:
    """Partitions that can contribute: l <= min(p, q-cap, t-cap), parts <= a-cap."""
    cap_t, cap_q, cap_a = caps
    max_len = min(p, cap_q, cap_t)
    return [nu for nu in enumerate_partitions_bounded(cap_a * p, cap_a, max_len)]


def enumerate_partitions_bounded(max_weight: int, max_part: int, max_len: int) -> list:
    out = []
    for w in range(max_weight + 1):
        out.extend(enumerate_partitions(w, max_part=max_part, max_length=max_len))
    return out


def theorem3_rhs(A, caps=(3, 3, 3), u: str | None = None, cap_u: int | None = None) -> Series:
    """sum_nu psi_nu(A) y^l(nu) / (1+t)^|nu| (1-y)^(z-|nu|), y = -qt/(1+t)."""
    A = _as_alphabet(A)
    names = A.names()
    sc = _t3_caps(names, caps, u, cap_u)
    _, _, inv_1pt, y = _y_and_friends(sc)
    letters = Alphabet(tuple(_letter(a, u) for a in names))
    powers: dict = {}
    total = Series(0, sc)
    for nu in theorem3_nu_range(len(names), caps):
        w = nu.weight
        if w not in powers:
            powers[w] = inv_1pt ** w * series_pow_symbolic(1 - y, Poly.var(Z) - w)
        total = total + Series(monomial(letters, nu), sc) * y ** len(nu) * powers[w]
    return total


def verify_theorem3(p, caps=(3, 3, 3)) -> VerificationReport:
    A = _as_alphabet(p)
    cache: dict = {}

    def lhs():
        if "lhs" not in cache:
            cache["lhs"] = theorem3_lhs(A, caps)
        return cache["lhs"]

    return compare("theorem3", {"letters": len(A), "caps": list(caps)}, [
        ("engine = monomial expansion", lambda: (lhs(), theorem3_rhs(A, caps))),
        ("engine = closed product", lambda: (lhs(), theorem3_closed_form(A, caps))),
    ])


# ---------------------------------------------------------------------------
# generating-function reformulation
# ---------------------------------------------------------------------------


def _eq11_lhs(n_max: int, X, cap_u: int, sc: dict) -> Series:
    t, q = Poly.var("t"), Poly.var("q")
    total = Series(0, sc)
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            side = _lhs_sum(n, lambda mu: Fraction(_sign(r - len(mu)) * gen_binom(mu, r),
                                                   mu.z()), X, U, cap_u, sign=-1)
            total = total + side.retruncate(sc) * ((-t) ** n * (-q) ** r)
    return total


def _eq11_rhs(n_max: int, X, cap_u: int, sc: dict) -> Series:
    t, q, u, z = (Poly.var(v) for v in ("t", "q", U, Z))
    total = Poly()
    neg_p = {}
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            for j in range(cap_u + 1):
                outer = binom_int(n + j - 1, n - r)
                if not outer:
                    continue
                inner = Poly()
                for k in range(min(r, j) + 1):
                    if (j, k) not in neg_p:
                        neg_p[j, k] = negate_x(p_jk(j, k, X), X)
                    inner = inner + binom_of(z - j, r - k) * neg_p[j, k]
                total = total + inner * (-t) ** n * (-q) ** r * u ** j * outer
    return Series(total, sc)


def _theorem1_transformed(n_max: int, X, cap_u: int, sc: dict, side) -> Series:
    t, q = Poly.var("t"), Poly.var("q")
    flip = {x: -Poly.var(x) for x in X}
    total = Series(0, sc)
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            s = side(n, r, cap_u, X).subs(flip).retruncate(sc)
            total = total + s * ((-t) ** n * (-q) ** r)
    return total


def verify_eq11_reformulation(n_max: int, cap_t: int | None = None, cap_q: int | None = None,
                              cap_u: int = 3, x_zero: bool = False,
                              letters: int = 0) -> VerificationReport:
    """Generating-function form of the first identity, summed over n <= n_max.

    Checks that its two sides agree, that each is the (-t)^n (-q)^r weighted
    sum of the first identity's sides with X -> -X, and, when ``letters`` > 0,
    that after X_k = psi^k(A) the sides plus the constant 1 equal the
    lambda_t[qB] computation and the monomial expansion for the alphabet uA.
    """
    cap_t = n_max if cap_t is None else cap_t
    cap_q = n_max if cap_q is None else cap_q
    X = x_names(cap_u)
    sc = {"t": cap_t, "q": cap_q, U: cap_u}
    zero = {x: 0 for x in X}

    def prep(s: Series) -> Series:
        return s.subs(zero) if x_zero else s

    cache: dict = {}

    def side(name):
        if name not in cache:
            build = {
                "lhs": lambda: _eq11_lhs(n_max, X, cap_u, sc),
                "rhs": lambda: _eq11_rhs(n_max, X, cap_u, sc),
                "t1l": lambda: _theorem1_transformed(n_max, X, cap_u, sc, theorem1_lhs),
                "t1r": lambda: _theorem1_transformed(n_max, X, cap_u, sc, theorem1_rhs),
            }[name]
            cache[name] = prep(build())
        return cache[name]

    pairs = [
        ("lhs = rhs", lambda: (side("lhs"), side("rhs"))),
        ("lhs = transformed theorem1 lhs", lambda: (side("lhs"), side("t1l"))),
        ("rhs = transformed theorem1 rhs", lambda: (side("rhs"), side("t1r"))),
    ]
    if letters and not x_zero:
        A = Alphabet.formal(letters)
        names = A.names()
        caps3 = (cap_t, cap_q, cap_u)
        full = _t3_caps(names, caps3, U, cap_u)
        at_ps = {x: power_sum(A, k) for k, x in enumerate(X, 1)}

        def specialised(name):
            return side(name).subs(at_ps).retruncate(full) + 1

        pairs += [
            ("1 + lhs = lambda_t[qB] on uA",
             lambda: (specialised("lhs"), theorem3_lhs(A, caps3, U, cap_u))),
            ("1 + rhs = monomial expansion on uA",
             lambda: (specialised("rhs"), theorem3_rhs(A, caps3, U, cap_u))),
        ]
    params = {"n_max": n_max, "t_cap": cap_t, "q_cap": cap_q, "u_cap": cap_u,
              "x_zero": x_zero, "letters": letters}
    return compare("eq11 reformulation", params, pairs)


def all_passed(reports) -> bool:
    return all(r.status == PASS for r in reports)
