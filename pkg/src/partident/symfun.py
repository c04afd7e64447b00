"""Symmetric functions evaluated on finite alphabets.

Naming follows the lambda-ring convention: ``elementary`` is Lambda^i,
``complete`` is S^i, ``power_sum`` is psi^i, ``monomial`` is psi_mu and
``schur`` is S_mu.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import NamedTuple, Sequence

from .exactring import Poly, Series, geometric, poly_sum
from .partitions import Partition, enumerate_partitions


@dataclass(frozen=True)
class Alphabet:
    """An ordered finite alphabet.

    Letters are polynomials: single variables for a formal alphabet, rational
    constants for a numeric one, or any monomial (e.g. products ``a*b``).
    Numeric alphabets may repeat a value (contents of a diagram do).
    """

    letters: tuple

    def __post_init__(self):
        letters = tuple(Poly.coerce(x) if not isinstance(x, str) else Poly.var(x)
                        for x in self.letters)
        formal = [x for x in letters if not x.is_constant()]
        if len(set(formal)) != len(formal):
            raise ValueError("formal letters must be distinct")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def formal(cls, size: int, prefix: str = "a") -> "Alphabet":
        return cls(tuple(f"{prefix}{k}" for k in range(1, size + 1)))

    @classmethod
    def numeric(cls, values: Sequence) -> "Alphabet":
        return cls(tuple(Fraction(v) for v in values))

    def names(self) -> list:
        """Variable names of a formal alphabet."""
        out = []
        for x in self.letters:
            (m, c), = x.terms.items()
            if c != 1 or len(m) != 1 or m[0][1] != 1:
                raise ValueError(f"letter {x} is not a bare variable")
            out.append(m[0][0])
        return out

    def times(self, other: "Alphabet") -> "Alphabet":
        """The product alphabet {a*b}."""
        return Alphabet(tuple(a * b for a in self.letters for b in other.letters))

    def __len__(self):
        return len(self.letters)


# ---------------------------------------------------------------------------
# classical bases
# ---------------------------------------------------------------------------


def elementary_all(A: Alphabet, top: int) -> list:
    e = [Poly.const(1)] + [Poly() for _ in range(top)]
    for x in A.letters:
        for k in range(top, 0, -1):
            e[k] = e[k] + x * e[k - 1]
    return e


def complete_all(A: Alphabet, top: int) -> list:
    h = [Poly.const(1)] + [Poly() for _ in range(top)]
    for x in A.letters:
        for k in range(1, top + 1):
            h[k] = h[k] + x * h[k - 1]
    return h


def elementary(A: Alphabet, i: int) -> Poly:
    if i < 0:
        return Poly()
    return elementary_all(A, i)[i]


def complete(A: Alphabet, i: int) -> Poly:
    if i < 0:
        return Poly()
    return complete_all(A, i)[i]


def power_sum(A: Alphabet, i: int) -> Poly:
    """psi^i(A); psi^0 is the cardinality."""
    if i < 0:
        raise ValueError("power sums need i >= 0")
    return poly_sum(x ** i for x in A.letters)


def _placements(parts: Counter, n_slots: int):
    # distinct ways of writing the multiset ``parts`` into n_slots, rest zero
    if n_slots == 0:
        if not parts:
            yield ()
        return
    total = sum(parts.values())
    if total > n_slots:
        return
    if total < n_slots:
        for rest in _placements(parts, n_slots - 1):
            yield (0,) + rest
    for value in list(parts):
        parts[value] -= 1
        if not parts[value]:
            del parts[value]
        for rest in _placements(parts, n_slots - 1):
            yield (value,) + rest
        parts[value] += 1


def monomial(A: Alphabet, mu: Partition) -> Poly:
    """psi_mu(A): sum of the distinct monomials whose exponents permute ``mu``."""
    mu = Partition(mu)
    if len(mu) > len(A):
        return Poly()
    terms = []
    for exps in _placements(Counter(mu), len(A)):
        term = Poly.const(1)
        for x, e in zip(A.letters, exps):
            if e:
                term = term * x ** e
        terms.append(term)
    return poly_sum(terms)


def determinant(matrix: Sequence[Sequence]):
    """Laplace expansion with memoisation over column subsets; entries form a ring."""
    n = len(matrix)
    if n == 0:
        return Poly.const(1)
    memo: dict = {}

    def minor(row: int, cols: tuple):
        if row == n:
            return Poly.const(1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = Poly()
        for idx, c in enumerate(cols):
            entry = matrix[row][c]
            if entry == 0:
                continue
            sub = minor(row + 1, cols[:idx] + cols[idx + 1:])
            term = entry * sub
            acc = acc - term if idx % 2 else acc + term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def jacobi_trudi(mu: Partition, h) -> Poly:
    """det(h(mu_i - i + j)) for a callable ``h`` with h(0)=1, h(<0)=0."""
    mu = Partition(mu)
    n = len(mu)
    return determinant([[h(mu[i] - i + j) for j in range(n)] for i in range(n)])


def schur(A: Alphabet, mu: Partition) -> Poly:
    mu = Partition(mu)
    top = mu[0] + len(mu) if mu else 0
    hs = complete_all(A, top)
    return jacobi_trudi(mu, lambda k: hs[k] if k >= 0 else Poly())


def alternant(A: Alphabet, exponents: Sequence[int]) -> Poly:
    """det(x_i ** exponents[j]) over the letters of ``A``."""
    n = len(A)
    if len(exponents) != n:
        raise ValueError("need one exponent per letter")
    return determinant([[x ** e for e in exponents] for x in A.letters])


BASES = {
    "elementary": elementary,
    "complete": complete,
    "power_sum": power_sum,
}


def mu_indexed(basis: str, A: Alphabet, mu: Partition) -> Poly:
    """f^mu = prod_i f^{mu_i} for f one of the multiplicative bases."""
    f = BASES[basis]
    out = Poly.const(1)
    for part in mu:
        out = out * f(A, part)
    return out


# ---------------------------------------------------------------------------
# change of basis into power sums (used to act by psi_mu on lambda-ring elements)
# ---------------------------------------------------------------------------


def _count_assignments(nu: tuple, mu: tuple) -> int:
    # functions parts(nu) -> rows(mu) whose fibre sums equal mu
    count = 0
    for f in product(range(len(mu)), repeat=len(nu)):
        sums = [0] * len(mu)
        for part, target in zip(nu, f):
            sums[target] += part
        if tuple(sums) == mu:
            count += 1
    return count


def _invert(matrix: list) -> list:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _monomial_power_sum_table(n: int) -> tuple:
    parts = enumerate_partitions(n)
    to_m = [[_count_assignments(nu, mu) for mu in parts] for nu in parts]
    return tuple(parts), _invert(to_m)


def monomial_in_power_sums(mu: Partition) -> dict:
    """psi_mu as a rational combination ``{nu: coeff}`` of psi^nu."""
    mu = Partition(mu)
    parts, inv = _monomial_power_sum_table(mu.weight)
    row = inv[parts.index(mu)]
    return {nu: c for nu, c in zip(parts, row) if c}


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------


def cauchy_sides(i: int, A: Alphabet) -> dict:
    """Both power-sum expansions next to the direct Lambda^i and S^i."""
    lam = Poly()
    sym = Poly()
    for mu in enumerate_partitions(i):
        term = mu_indexed("power_sum", A, mu) / mu.z()
        sym = sym + term
        lam = lam + term * (-1) ** (i - len(mu))
    return {
        "elementary": (elementary(A, i), lam),
        "complete": (complete(A, i), sym),
    }


def check_cauchy(i: int, A: Alphabet) -> bool:
    return all(a == b for a, b in cauchy_sides(i, A).values())


def kernel_expansions(i: int, A: Alphabet, B: Alphabet) -> dict:
    """The three expansions of S^i[PQ] and of Lambda^i[PQ] for P=sum(A), Q=sum(B).

    Returns ``{name: value}`` together with the direct evaluations on the
    product alphabet under the keys ``"S direct"`` and ``"Lambda direct"``.
    """
    AB = A.times(B)
    out = {"S direct": complete(AB, i), "Lambda direct": elementary(AB, i)}
    s_p = s_m = s_s = Poly()
    l_p = l_m = l_s = Poly()
    for mu in enumerate_partitions(i):
        pp = mu_indexed("power_sum", A, mu) * mu_indexed("power_sum", B, mu) / mu.z()
        s_p = s_p + pp
        l_p = l_p + pp * (-1) ** (i - len(mu))
        m_a = monomial(A, mu)
        s_m = s_m + m_a * mu_indexed("complete", B, mu)
        l_m = l_m + m_a * mu_indexed("elementary", B, mu)
        s_a = schur(A, mu)
        s_s = s_s + s_a * schur(B, mu)
        l_s = l_s + s_a * schur(B, mu.conjugate())
    out.update({
        "S via power sums": s_p, "S via monomials": s_m, "S via Schur": s_s,
        "Lambda via power sums": l_p, "Lambda via monomials": l_m,
        "Lambda via Schur": l_s,
    })
    return out


def check_kernel_expansions(i: int, A: Alphabet, B: Alphabet) -> bool:
    exp = kernel_expansions(i, A, B)
    s, lam = exp["S direct"], exp["Lambda direct"]
    return all(v == (s if k.startswith("S") else lam) for k, v in exp.items())


class SubsetProduct(NamedTuple):
    lhs: Series
    rhs: Series
    equal: bool


def subset_product_expand(A: Alphabet, v: str, y: str, n: int, cap_v: int) -> SubsetProduct:
    """Both sides of sum_{|N|=n} prod_{a in N} y*v*a/(1-v*a) = y^n sum_{l(nu)=n} v^|nu| psi_nu(A).

    ``v`` is truncated at ``cap_v``; ``y`` and the letters stay exact.
    """
    caps = {v: cap_v}
    yv = Poly.var(y)
    lhs = Series(0, caps)
    if n <= len(A):
        factors = [(geometric(v, caps, scale=a) - 1) * yv for a in A.letters]
        for subset in combinations(factors, n):
            term = Series(1, caps)
            for f in subset:
                term = term * f
            lhs = lhs + term
    rhs = Series(0, caps)
    if n <= len(A):
        for weight in range(n, cap_v + 1):
            for nu in enumerate_partitions(weight, max_length=n):
                if len(nu) == n:
                    rhs = rhs + Series(monomial(A, nu) * Poly.var(v, weight), caps)
        rhs = rhs * yv ** n
    return SubsetProduct(lhs, rhs, lhs == rhs)
