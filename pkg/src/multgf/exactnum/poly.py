"""Dense univariate polynomials with cyclotomic coefficients."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from typing import Iterable

import flint

from .cyclotomic import ONE, ZERO, Cyc, cyc, cyclotomic_coeffs, euler_phi

__all__ = ["UniPoly", "cyclotomic_poly", "poly_gcd"]


class UniPoly:
    """Polynomial sum(coeffs[i] * z^i); coefficients are Cyc, lowest degree first."""

    __slots__ = ("coeffs", "_rat")

    def __init__(self, coeffs: Iterable = ()):
        cs = [cyc(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self._rat = _UNSET

    @classmethod
    def _raw(cls, cs: list) -> "UniPoly":
        while cs and cs[-1].is_zero():
            cs.pop()
        p = cls.__new__(cls)
        p.coeffs = tuple(cs)
        p._rat = _UNSET
        return p

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lead(self) -> Cyc:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, i: int) -> Cyc:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def is_rational(self) -> bool:
        return all(c.order == 1 for c in self.coeffs)

    # -- ring operations ---------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly._raw([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (Cyc, int, Fraction)):
            c = cyc(other)
            if c.is_zero():
                return UniPoly()
            return UniPoly._raw([x * c for x in self.coeffs])
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return UniPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = UniPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.degree
        if len(rem) - 1 < dn:
            return UniPoly(), self
        inv_lead = other.lead.inverse()
        q = [ZERO] * (len(rem) - dn)
        den = other.coeffs
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            c = c * inv_lead
            q[i - dn] = c
            for j in range(dn + 1):
                if not den[j].is_zero():
                    rem[i - dn + j] = rem[i - dn + j] - c * den[j]
        return UniPoly._raw(q), UniPoly._raw(rem[:dn])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = self.lead.inverse()
        return UniPoly._raw([c * inv for c in self.coeffs])

    def __eq__(self, other):
        try:
            other = _as_poly(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- evaluation and transforms ------------------------------------
    def __call__(self, x):
        acc = ZERO
        if isinstance(x, UniPoly):
            acc = UniPoly()
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = cyc(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_int(self, n: int) -> Cyc:
        """Fast evaluation at an integer argument."""
        if self.is_rational_cached():
            num, den = _rational_form(self)
            acc = 0
            for c in reversed(num):
                acc = acc * n + c
            return Cyc(1, (acc,), den)
        return self(n)

    def is_rational_cached(self) -> bool:
        return _rational_form(self) is not None

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([c * i for i, c in enumerate(self.coeffs)][1:])

    def compose_power(self, k: int) -> "UniPoly":
        """p(z^k)."""
        if k == 1 or self.degree <= 0:
            return self
        out = [ZERO] * (k * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return UniPoly._raw(out)

    def scale_var(self, c) -> "UniPoly":
        """p(c*z)."""
        c = cyc(c)
        out, pw = [], ONE
        for a in self.coeffs:
            out.append(a * pw)
            pw = pw * c
        return UniPoly._raw(out)

    def shift(self, s: int) -> "UniPoly":
        """p(z + s) by Taylor shift."""
        if s == 0 or self.degree <= 0:
            return self
        n = len(self.coeffs)
        out = [ZERO] * n
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(i + 1):
                out[j] = out[j] + a * (comb(i, j) * s ** (i - j))
        return UniPoly._raw(out)

    def mul_shift(self, k: int) -> "UniPoly":
        """z^k * p."""
        if self.is_zero() or k == 0:
            return self
        return UniPoly._raw([ZERO] * k + list(self.coeffs))

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return -1

    def conjugate(self) -> "UniPoly":
        return UniPoly._raw([c.conjugate() for c in self.coeffs])

    def galois(self, k: int) -> "UniPoly":
        return UniPoly._raw([c.galois(k) if c.order > 1 else c for c in self.coeffs])

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> "UniPoly":
        if not isinstance(obj, list):
            raise ValueError("polynomial encoding must be a list of coefficients")
        return cls(Cyc.from_json(c) for c in obj)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = repr(c)
            if c.order > 1:
                cs = f"({cs})"
            mon = "" if i == 0 else "z" if i == 1 else f"z^{i}"
            if not mon:
                terms.append(cs)
            elif c.is_one():
                terms.append(mon)
            elif c == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{cs}*{mon}")
        return " + ".join(terms).replace("+ -", "- ")


_UNSET = object()


def _rational_form(p: UniPoly):
    """(integer numerators, common denominator) when all coefficients are rational."""
    if p._rat is _UNSET:
        if all(c.order == 1 for c in p.coeffs):
            den = lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1
            num = tuple(c.numerators[0] * (den // c.denominator) for c in p.coeffs)
            p._rat = (num, den)
        else:
            p._rat = None
    return p._rat


def _as_poly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (Cyc, int, Fraction)):
        return UniPoly([x])
    raise TypeError(f"cannot convert {type(x).__name__} to UniPoly")


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero only if both inputs are zero)."""
    if a.is_zero() or b.is_zero():
        return (b if a.is_zero() else a).monic()
    if a.degree == 0 or b.degree == 0:
        return UniPoly([1])
    ra, rb = _rational_form(a), _rational_form(b)
    if ra is not None and rb is not None:
        g = flint.fmpq_poly(list(ra[0])).gcd(flint.fmpq_poly(list(rb[0])))
        lead = g[g.degree()]
        return UniPoly([Fraction(int((c / lead).p), int((c / lead).q)) for c in g.coeffs()])
    from .modgcd import cyclotomic_gcd

    m = lcm(1, *(c.order for c in a.coeffs + b.coeffs))
    return cyclotomic_gcd(a, b, m)


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> UniPoly:
    """Phi_d as a UniPoly with integer coefficients, degree phi(d)."""
    if d < 1:
        raise ValueError("cyclotomic polynomial index must be >= 1")
    p = UniPoly(cyclotomic_coeffs(d))
    assert p.degree == euler_phi(d)
    return p
