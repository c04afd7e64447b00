"""Batteries of checks grouped the way the CLI and the acceptance suite run them."""

from __future__ import annotations

import random
from fractions import Fraction
from math import prod

from . import application as app
from . import identities as ids
from .combinat import gen_binom, gen_binom_brute
from .exactring import Poly
from .lambdaring import (
    LambdaElement,
    binomial_type_table,
    check_rank1_scaling,
    in_q,
    lambda_coeff,
    lambda_mu_action,
    lambda_t_action,
    psi_action,
    psi_mu_of_q,
    q_element,
    sigma_coeff,
    sigma_mu_action,
    sigma_t_action,
    sum_product_rules,
)
from .partitions import Partition, partitions_up_to
from .pjk import p_jk, p_jk_at_power_sums, p_jk_via_lemma2, x_names
from .report import compare
from .symfun import Alphabet, cauchy_sides, kernel_expansions, subset_product_expand

THEOREM4_PARTITIONS = [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)]
THEOREM4_ALPHAS = [Fraction(1), Fraction(2), Fraction(1, 2)]


# ---------------------------------------------------------------------------
# combinatorics
# ---------------------------------------------------------------------------


def genbinom_oracle(max_weight: int = 8):
    def pairs():
        for lam in partitions_up_to(max_weight):
            for r in range(lam.weight + 2):
                yield (f"{lam} r={r}", lambda lam=lam, r=r: (gen_binom(lam, r),
                                                              gen_binom_brute(lam, r)))
            yield (f"{lam} sum rule", lambda lam=lam: (
                sum(gen_binom(lam, r) for r in range(lam.weight + 1)),
                prod(2 ** p - 1 for p in lam)))
    return compare("genbinom = subset oracle", {"max_weight": max_weight}, pairs())


def pjk_dual(j_max: int = 6, letters: int = 6):
    A = Alphabet.formal(letters)
    pairs = [(f"j={j} k={k}", lambda j=j, k=k: (p_jk_at_power_sums(j, k, A),
                                                 p_jk_via_lemma2(j, k, A)))
             for j in range(j_max + 1) for k in range(j + 1)]
    return compare("P_jk two routes", {"j_max": j_max, "letters": letters}, pairs)


def pjk_closed_forms(j_max: int = 8):
    def p_j2(j):
        X = [Poly.var(x) for x in x_names(j)]
        out = X[j - 1] * Fraction(j - 1, 2)
        for j1 in range(1, j):
            out = out + X[j1 - 1] * X[j - j1 - 1] / 2
        return out

    pairs = []
    for j in range(1, j_max + 1):
        pairs.append((f"P_{j}1", lambda j=j: (p_jk(j, 1), Poly.var(f"X{j}"))))
        pairs.append((f"P_{j}2", lambda j=j: (p_jk(j, 2), p_j2(j))))
        pairs.append((f"P_{j}0", lambda j=j: (p_jk(j, 0), 0)))
    pairs.append(("P_00", lambda: (p_jk(0, 0), 1)))
    return compare("P_jk closed forms", {"j_max": j_max}, pairs)


# ---------------------------------------------------------------------------
# lambda-ring formulary
# ---------------------------------------------------------------------------

ATOMS = ("a1", "a2", "a3", "q'")


def random_element(rng: random.Random, with_z: bool = False, terms: int = 3) -> LambdaElement:
    """A small random sum of rank-1 monomials; ``with_z`` allows affine-in-z coefficients."""
    p = Poly()
    for _ in range(rng.randint(1, terms)):
        mono = Poly.const(1)
        for _ in range(rng.randint(0, 2)):
            mono = mono * Poly.var(rng.choice(ATOMS))
        c = Poly.const(rng.choice([-2, -1, 1, 2, 3]))
        if with_z and rng.random() < 0.5:
            c = c + Poly.var("z") * rng.choice([-1, 1])
        p = p + mono * c
    return LambdaElement(p)


def random_pairs(seed: int, count: int = 20):
    rng = random.Random(seed)
    return [(random_element(rng, with_z=True), random_element(rng)) for _ in range(count)]


def lambda_table(i_max: int = 4):
    pairs = []
    for i in range(1, i_max + 1):
        for name, (a, b) in binomial_type_table(i).items():
            pairs.append((f"i={i} {name}", lambda a=a, b=b: (a, b)))
    return compare("lambda-ring constants and rank-1 table", {"i_max": i_max}, pairs)


def lambda_rules(seed: int = 0, count: int = 20, i_max: int = 4):
    cases = random_pairs(seed, count)

    def pairs():
        for n, (P, Q) in enumerate(cases):
            for i in range(1, i_max + 1):
                for name, (a, b) in sum_product_rules(P, Q, i).items():
                    yield (f"case {n} i={i} {name}", lambda a=a, b=b: (a, b))
                yield (f"case {n} i={i} psi multiplicative", lambda P=P, Q=Q, i=i: (
                    psi_action(i, P * Q).poly, psi_action(i, P).poly * psi_action(i, Q).poly))
                yield (f"case {n} i={i} sigma_t lambda_-t = 1", lambda P=P: (
                    sigma_t_action(P, "t", {"t": i_max})
                    * lambda_t_action(P, "t", {"t": i_max}).rescale("t", -1), 1))
                yield (f"case {n} i={i} rank-1 scaling",
                       lambda Q=Q, i=i: (int(check_rank1_scaling("b", Q, i)), 1))
            yield (f"case {n} lambda_t[PQ] for rank-1 atoms", lambda: (
                lambda_t_action(LambdaElement.atom("a1") * LambdaElement.atom("a2"), "t",
                                {"t": i_max}),
                1 + Poly.var("t") * Poly.var("a1") * Poly.var("a2")))

    return compare("lambda-ring sum/product rules", {"seed": seed, "count": count,
                                                     "i_max": i_max}, pairs())


def lambda_q_formulas(max_weight: int = 6):
    q = q_element()
    qv = Poly.var("q")
    pairs = []
    for i in range(1, max_weight + 1):
        pairs.append((f"Lambda^{i}[q]", lambda i=i: (
            in_q(lambda_coeff(i, q)), qv * (-1 if (i - 1) % 2 else 1))))
        pairs.append((f"S^{i}[q]", lambda i=i: (in_q(sigma_coeff(i, q)), (1 + qv) ** (i - 1) * qv)))
    for mu in partitions_up_to(max_weight):
        if not mu:
            continue
        n, l = mu.weight, len(mu)
        pairs.append((f"Lambda^{mu}[q]", lambda mu=mu, n=n, l=l: (
            in_q(lambda_mu_action(mu, q)), qv ** l * (-1 if (n - l) % 2 else 1))))
        pairs.append((f"S^{mu}[q]", lambda mu=mu, n=n, l=l: (
            in_q(sigma_mu_action(mu, q)), (1 + qv) ** (n - l) * qv ** l)))
    for mu in partitions_up_to(max_weight):
        pairs.append((f"psi^{mu}[q] = sum <mu,k> q^k", lambda mu=mu: (
            psi_mu_of_q(mu),
            Poly({(("q", k),) if k else (): gen_binom(mu, k) for k in range(mu.weight + 1)}))))
    return compare("lambda-ring values at q = q'-1", {"max_weight": max_weight}, pairs)


# ---------------------------------------------------------------------------
# symmetric functions
# ---------------------------------------------------------------------------


def cauchy_formulas(i_max: int = 6, sizes=(3, 4, 5, 6)):
    pairs = []
    for size in sizes:
        A = Alphabet.formal(size)
        for i in range(i_max + 1):
            for name in ("elementary", "complete"):
                pairs.append((f"{name} i={i} letters={size}",
                              lambda A=A, i=i, name=name: cauchy_sides(i, A)[name]))
    return compare("Cauchy power-sum expansions", {"i_max": i_max, "sizes": list(sizes)}, pairs)


def kernel_formulas(i_max: int = 4, sizes=((2, 2), (2, 3), (3, 3))):
    def pairs():
        for p, r in sizes:
            A, B = Alphabet.formal(p, "a"), Alphabet.formal(r, "b")
            for i in range(i_max + 1):
                exp = kernel_expansions(i, A, B)
                for name, value in exp.items():
                    if "direct" in name:
                        continue
                    direct = exp["S direct" if name.startswith("S") else "Lambda direct"]
                    yield (f"{name} i={i} |A|={p} |B|={r}", lambda v=value, d=direct: (v, d))

    return compare("kernel expansions of S^i[PQ], Lambda^i[PQ]",
                   {"i_max": i_max, "sizes": [list(s) for s in sizes]}, pairs())


def binomial_series(j_max: int = 5, cap_t: int = 6):
    pairs = [(f"j={j}", lambda j=j: (int(ids.binomial_series_lemma(j, cap_t)), 1))
             for j in range(1, j_max + 1)]
    pairs += [(f"shifted r={r} weight={w}",
               lambda r=r, w=w: (int(ids.shifted_binomial_series(r, w, cap_t)), 1))
              for r in range(0, 4) for w in range(0, 4)]
    return compare("binomial series", {"j_max": j_max, "t_cap": cap_t}, pairs)


def subset_products(max_letters: int = 4, cap_v: int = 5):
    pairs = []
    for p in range(0, max_letters + 1):
        A = Alphabet.formal(p)
        for n in range(0, p + 2):
            res = subset_product_expand(A, "v", "y", n, cap_v)
            pairs.append((f"letters={p} n={n}", lambda res=res: (res.lhs, res.rhs)))
    return compare("subset product expansion", {"max_letters": max_letters, "v_cap": cap_v},
                   pairs)


# ---------------------------------------------------------------------------
# application
# ---------------------------------------------------------------------------


def theorem4_grid(cap_w: int = 6):
    return [app.verify_theorem4(Partition(lam), a, cap_w)
            for lam in THEOREM4_PARTITIONS for a in THEOREM4_ALPHAS]


def vanishing_grid(extra: int = 3, j_max: int = 4):
    out = []
    for lam in THEOREM4_PARTITIONS:
        n = sum(lam)
        for a in THEOREM4_ALPHAS:
            out.append(app.verify_vanishing(Partition(lam), a, range(n + 1, n + extra + 1),
                                            range(j_max + 1)))
    return out


# ---------------------------------------------------------------------------
# the default sweep
# ---------------------------------------------------------------------------


def default_sweep(seed: int = 0, jobs: int = 1) -> list:
    reports = []
    reports += ids.verify_theorem1(5, 5, jobs)
    reports += ids.verify_theorem2(6, 4, jobs)
    reports += ids.verify_x_zero(5)
    reports += [ids.verify_theorem3(p, (3, 3, 3)) for p in range(4)]
    reports += [ids.verify_eq11_reformulation(3, cap_u=3),
                ids.verify_eq11_reformulation(3, cap_u=3, x_zero=True),
                ids.verify_eq11_reformulation(3, cap_u=3, letters=2)]
    reports += theorem4_grid()
    reports += vanishing_grid()
    reports += [app.chu_vandermonde_demo(n) for n in range(1, 5)]
    reports += [genbinom_oracle(), pjk_dual(), pjk_closed_forms()]
    reports += [lambda_table(), lambda_rules(seed), lambda_q_formulas()]
    reports += [cauchy_formulas(), kernel_formulas(), binomial_series(), subset_products()]
    return reports
