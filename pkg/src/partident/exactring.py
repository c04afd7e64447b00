"""Exact sparse polynomials over Q and truncated multivariate power series.

Coefficients are :class:`fractions.Fraction` everywhere.  A monomial is a
tuple of ``(name, exponent)`` pairs sorted by variable name, with zero
exponents omitted; the empty tuple is the constant monomial.

A :class:`Series` is a :class:`Poly` together with a truncation profile: a
mapping from *series* variables to the largest exponent kept.  Any variable
that occurs in a series without a cap is a *polynomial* variable and is never
truncated.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable, Mapping, Union

Mono = tuple
Scalar = Union[int, Fraction]

ONE_MONO: Mono = ()


class ClassingConflictError(ValueError):
    """A variable is truncated in one operand and exact in the other."""


class NotInvertibleError(ZeroDivisionError):
    pass


class SeriesDomainError(ValueError):
    """log / symbolic power of a series whose constant term is not 1."""


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_pow(a: Mono, n: int) -> Mono:
    if n == 0:
        return ONE_MONO
    return tuple((v, e * n) for v, e in a)


def mono_str(m: Mono) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


def _fits(m: Mono, caps: Mapping[str, int]) -> bool:
    for v, e in m:
        c = caps.get(v)
        if c is not None and e > c:
            return False
    return True


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Poly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Mono, Scalar] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    m = tuple(sorted((v, e) for v, e in m if e))
                    if any(e < 0 for _, e in m):
                        raise ValueError(f"negative exponent in {m}")
                    c = Fraction(c) + clean.get(m, 0)
                    if c:
                        clean[m] = c
                    else:
                        clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # caller guarantees canonical keys and nonzero Fraction values
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Poly":
        return cls._raw({((name, power),) if power else (): Fraction(1)})

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        return NotImplemented

    # -- inspection --------------------------------------------------------
    @property
    def terms(self) -> dict:
        """Read-only view by convention; do not mutate."""
        return self._terms

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def coeff(self, mono: Mono | Mapping[str, int]) -> Fraction:
        if isinstance(mono, Mapping):
            mono = tuple(sorted((v, e) for v, e in mono.items() if e))
        return self._terms.get(tuple(mono), Fraction(0))

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``.  The zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self._terms)
        return max(dict(m).get(var, 0) for m in self._terms)

    def coefficient_of(self, var: str, k: int) -> "Poly":
        """Coefficient of ``var**k``, a polynomial in the other variables."""
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            if d.get(var, 0) == k:
                d.pop(var, None)
                out[tuple(sorted(d.items()))] = c
        return Poly._raw(out)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = Poly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = Poly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly()
        return Poly._raw({m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly._raw(_mul_terms(self._terms, other._terms, None))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Poly powers must be nonnegative integers")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Series):
            return NotImplemented
        other = Poly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution ------------------------------------------------------
    def subs(self, mapping: Mapping[str, "Poly | Scalar"]) -> "Poly":
        """Ring homomorphism sending each mapped variable to a polynomial."""
        return Poly._raw(_compose(self._terms, mapping, None))

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        result = Fraction(0)
        for m, c in self._terms.items():
            for v, e in m:
                c = c * Fraction(values[v]) ** e
            result += c
        return result

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return render(self._terms)


def render(terms: Mapping[Mono, Fraction]) -> str:
    """Canonical text: monomials sorted by (variable name, exponent) pairs."""
    if not terms:
        return "0"
    parts = []
    for m, c in sorted(terms.items()):
        neg = c < 0
        a = -c if neg else c
        body = mono_str(m)
        if not body:
            text = _coeff_str(a)
        elif a == 1:
            text = body
        else:
            text = f"{_coeff_str(a)}*{body}"
        if not parts:
            parts.append(f"-{text}" if neg else text)
        else:
            parts.append(f" - {text}" if neg else f" + {text}")
    return "".join(parts)


def _mul_terms(ta: dict, tb: dict, caps: Mapping[str, int] | None) -> dict:
    if len(ta) < len(tb):
        ta, tb = tb, ta
    out: dict = {}
    get = out.get
    for mb, cb in tb.items():
        for ma, ca in ta.items():
            m = mono_mul(ma, mb)
            if caps and not _fits(m, caps):
                continue
            out[m] = get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def _compose(terms: dict, mapping: Mapping, caps: Mapping[str, int] | None) -> dict:
    images = {}
    for v, img in mapping.items():
        if isinstance(img, Series):
            img = img.poly
        img = Poly.coerce(img)
        if img is NotImplemented:
            raise TypeError(f"cannot substitute {type(mapping[v])} for {v}")
        images[v] = img._terms
    powers: dict = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            if e == 1:
                powers[key] = _truncate(images[v], caps)
            else:
                half = power(v, e // 2)
                sq = _mul_terms(half, half, caps)
                powers[key] = _mul_terms(sq, images[v], caps) if e % 2 else sq
        return powers[key]

    out: dict = {}
    for m, c in terms.items():
        acc = {(): c}
        rest = []
        for v, e in m:
            if v in images:
                acc = _mul_terms(acc, power(v, e), caps)
                if not acc:
                    break
            else:
                rest.append((v, e))
        if not acc:
            continue
        rest_m = tuple(rest)
        for am, ac in acc.items():
            mm = mono_mul(am, rest_m)
            if caps and not _fits(mm, caps):
                continue
            out[mm] = out.get(mm, 0) + ac
    return {m: c for m, c in out.items() if c}


def _truncate(terms: dict, caps: Mapping[str, int] | None) -> dict:
    if not caps:
        return terms
    return {m: c for m, c in terms.items() if _fits(m, caps)}


# ---------------------------------------------------------------------------
# Truncated series
# ---------------------------------------------------------------------------


class Series:
    """A polynomial modulo ``v**(cap+1)`` for every capped variable ``v``.

    Arithmetic with another :class:`Series` uses the pointwise minimum of the
    two profiles.  Plain polynomials and scalars are read in the profile of the
    series they are combined with.  Equality is equality up to the common
    profile.
    """

    __slots__ = ("poly", "caps")

    def __init__(self, poly: "Poly | Scalar" = 0, caps: Mapping[str, int] | None = None):
        caps = dict(caps or {})
        for v, c in caps.items():
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"cap for {v!r} must be a nonnegative int, got {c!r}")
        poly = Poly.coerce(poly)
        if poly is NotImplemented:
            raise TypeError("Series expects a Poly or a rational scalar")
        self.caps = caps
        self.poly = Poly._raw(_truncate(poly._terms, caps))

    @classmethod
    def var(cls, name: str, caps: Mapping[str, int]) -> "Series":
        return cls(Poly.var(name), caps)

    # -- profile handling --------------------------------------------------
    def series_vars(self) -> set:
        return set(self.caps)

    def poly_vars(self) -> set:
        return self.poly.variables() - set(self.caps)

    def _merge_caps(self, other: "Series") -> dict:
        clash = (set(self.caps) & other.poly_vars()) | (set(other.caps) & self.poly_vars())
        if clash:
            raise ClassingConflictError(
                f"variables {sorted(clash)} are truncated in one operand and exact in the other"
            )
        caps = dict(self.caps)
        for v, c in other.caps.items():
            caps[v] = min(c, caps[v]) if v in caps else c
        return caps

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        p = Poly.coerce(other)
        if p is NotImplemented:
            return NotImplemented
        return Series(p, self.caps)

    def retruncate(self, caps: Mapping[str, int]) -> "Series":
        merged = dict(self.caps)
        for v, c in caps.items():
            merged[v] = min(c, merged[v]) if v in merged else c
        return Series(self.poly, merged)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        caps = self._merge_caps(other)
        return Series(self.poly + other.poly, caps)

    __radd__ = __add__

    def __neg__(self):
        return Series._make(-self.poly, self.caps)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series._make(self.poly.scale(other), self.caps)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        caps = self._merge_caps(other)
        a = _truncate(self.poly._terms, caps)
        b = _truncate(other.poly._terms, caps)
        return Series._make(Poly._raw(_mul_terms(a, b, caps)), caps)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * series_inverse(other.retruncate(self.caps))

    def __rtruediv__(self, other):
        return series_inverse(self) * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return series_inverse(self) ** (-n)
        result = Series(1, self.caps)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    @classmethod
    def _make(cls, poly: Poly, caps: dict) -> "Series":
        s = cls.__new__(cls)
        s.poly = poly
        s.caps = caps
        return s

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).poly.is_zero()

    __hash__ = None

    # -- pieces --------------------------------------------------------------
    def graded(self) -> list:
        """Split into pieces homogeneous in the total degree of capped variables."""
        top = sum(self.caps.values())
        pieces = [dict() for _ in range(top + 1)]
        for m, c in self.poly._terms.items():
            d = sum(e for v, e in m if v in self.caps)
            pieces[d][m] = c
        return pieces

    def constant_part(self) -> Poly:
        """Terms with every series exponent zero (may involve polynomial variables)."""
        return Poly._raw({m: c for m, c in self.poly._terms.items()
                          if not any(v in self.caps for v, _ in m)})

    def coefficient(self, var: str, k: int) -> Poly:
        return self.poly.coefficient_of(var, k)

    def subs(self, mapping: Mapping[str, "Series | Poly | Scalar"]) -> "Series":
        """Substitute polynomials/series for variables and re-truncate.

        A substituted variable drops out of the profile; the images' profiles
        are merged in.
        """
        caps = {v: c for v, c in self.caps.items() if v not in mapping}
        probe = Series._make(Poly(), caps)
        for img in mapping.values():
            if isinstance(img, Series):
                caps = probe._merge_caps(img)
                probe = Series._make(Poly(), caps)
        return Series._make(Poly._raw(_compose(self.poly._terms, mapping, caps)), caps)

    def rescale(self, var: str, factor: Scalar) -> "Series":
        """Substitute ``var -> factor * var`` keeping the profile."""
        factor = Fraction(factor)
        out = {}
        for m, c in self.poly.terms.items():
            e = dict(m).get(var, 0)
            out[m] = c * factor ** e if e else c
        return Series._make(Poly._raw({m: c for m, c in out.items() if c}), dict(self.caps))

    def __repr__(self):
        caps = ", ".join(f"{v}<={c}" for v, c in sorted(self.caps.items()))
        return f"Series({self.poly}; {caps})"

    def __str__(self):
        return str(self.poly)


def _pieces_mul(a: dict, b: dict, caps) -> dict:
    if not a or not b:
        return {}
    return _mul_terms(a, b, caps)


def _acc(target: dict, src: dict, factor=1):
    for m, c in src.items():
        s = target.get(m, 0) + c * factor
        if s:
            target[m] = s
        else:
            target.pop(m, None)


def _acc_poly(target: dict, src: dict, factor: Poly, caps):
    # target += factor * src, factor a polynomial in exact variables
    if factor.is_constant():
        _acc(target, src, factor.constant_term())
    else:
        _acc(target, _mul_terms(src, factor._terms, caps))


def _assemble(pieces: list, caps) -> "Series":
    out = {}
    for p in pieces:
        out.update(p)
    return Series._make(Poly._raw(out), dict(caps))


def series_add(a: Series, b: Series) -> Series:
    return a + b


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_inverse(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be a nonzero rational."""
    a = a if isinstance(a, Series) else Series(a)
    pieces = a.graded()
    c0 = Poly._raw(pieces[0])
    if c0.is_zero() or not c0.is_constant():
        raise NotInvertibleError(f"constant term {c0} is not a nonzero rational")
    inv0 = 1 / c0.constant_term()
    caps = a.caps
    out = [{(): inv0}]
    for d in range(1, len(pieces)):
        acc: dict = {}
        for k in range(1, d + 1):
            if pieces[k] and out[d - k]:
                _acc(acc, _pieces_mul(pieces[k], out[d - k], caps))
        out.append({m: -c * inv0 for m, c in acc.items()})
    return _assemble(out, caps)


def _require_unit_constant(a: Series, what: str) -> list:
    pieces = a.graded()
    if pieces[0] != {(): Fraction(1)}:
        raise SeriesDomainError(
            f"{what} needs constant term exactly 1, got {render(pieces[0])}")
    return pieces


def series_log(a: Series) -> Series:
    """log(a) for a series with constant term 1.

    Solved degree by degree from ``a * D(log a) = D(a)`` where ``D`` multiplies
    each term by its total degree in the capped variables.
    """
    pieces = _require_unit_constant(a, "log")
    caps = a.caps
    out: list = [{}]
    for d in range(1, len(pieces)):
        acc = {m: c * d for m, c in pieces[d].items()}
        for k in range(1, d):
            if pieces[k] and out[d - k]:
                _acc(acc, _pieces_mul(pieces[k], out[d - k], caps), -(d - k))
        out.append({m: c / d for m, c in acc.items()})
    return _assemble(out, caps)


def series_exp(s: Series) -> Series:
    """exp(s) for a series with zero constant term."""
    pieces = s.graded()
    if pieces[0]:
        raise SeriesDomainError("exp needs a series without constant term")
    caps = s.caps
    out: list = [{(): Fraction(1)}]
    for d in range(1, len(pieces)):
        acc: dict = {}
        for k in range(1, d + 1):
            if pieces[k] and out[d - k]:
                _acc(acc, _pieces_mul(pieces[k], out[d - k], caps), k)
        out.append({m: c / d for m, c in acc.items()})
    return _assemble(out, caps)


def series_pow_symbolic(a: Series, g: "Poly | Scalar") -> Series:
    """``a**g = exp(g log a)`` with ``g`` a polynomial in exact variables.

    Uses the recurrence ``d f_d = sum_k (g k - (d - k)) a_k f_{d-k}`` obtained
    from ``a D(f) = g f D(a)``.
    """
    g = Poly.coerce(g)
    if g is NotImplemented:
        raise TypeError("exponent must be a Poly or rational scalar")
    if g.variables() & set(a.caps):
        raise ClassingConflictError("exponent involves a truncated variable")
    pieces = _require_unit_constant(a, "symbolic power")
    caps = a.caps
    out: list = [{(): Fraction(1)}]
    for d in range(1, len(pieces)):
        acc: dict = {}
        for k in range(1, d + 1):
            if not pieces[k] or not out[d - k]:
                continue
            prod = _pieces_mul(pieces[k], out[d - k], caps)
            if prod:
                _acc_poly(acc, prod, g * k - (d - k), caps)
        out.append({m: c / d for m, c in acc.items()})
    return _assemble(out, caps)


def geometric(var: str, caps: Mapping[str, int], scale: "Poly | Scalar" = 1) -> Series:
    """1/(1 - scale*var) truncated; ``var`` must be capped."""
    if var not in caps:
        raise ValueError(f"{var!r} needs a cap")
    x = Series(Poly.var(var) * Poly.coerce(scale), caps)
    return series_inverse(1 - x)


def variables(*names: str) -> tuple:
    return tuple(Poly.var(n) for n in names)


def poly_sum(items: Iterable) -> Poly:
    acc: dict = {}
    for p in items:
        p = Poly.coerce(p)
        _acc(acc, p._terms)
    return Poly._raw(acc)


def series_sum(items: Iterable, caps: Mapping[str, int]) -> Series:
    total = Series(0, caps)
    for s in items:
        total = total + s
    return total


def product_grid(caps: Mapping[str, int]):
    """All monomials inside the box defined by ``caps``."""
    names = sorted(caps)
    for exps in _cartesian(*(range(caps[v] + 1) for v in names)):
        yield tuple((v, e) for v, e in zip(names, exps) if e)
