"""Truncated series F(z) = sum_{n>=1} f(n) z^n and exact rational functions."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from ..exactnum import ZERO, Cyc, UniPoly, cyc, euler_phi, poly_gcd


class TruncatedSeries:
    """Coefficients of z^1..z^N; the constant term is zero by convention."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = tuple(cyc(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = cs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Cyc:
        """f(n) for 1 <= n <= N."""
        if not 1 <= n <= len(self.coeffs):
            raise IndexError(n)
        return self.coeffs[n - 1]

    def full(self) -> list:
        """[0, f(1), ..., f(N)]: coefficients from z^0."""
        return [ZERO] + list(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def to_json(self) -> dict:
        return {"length": len(self.coeffs), "coeffs": [c.to_json() for c in self.coeffs]}

    def __repr__(self):
        terms = [f"({c!r})*z^{i}" for i, c in enumerate(self.coeffs, start=1) if not c.is_zero()]
        return " + ".join(terms) if terms else "0"


def series_from_mf(f, N: int) -> TruncatedSeries:
    if N < 1:
        raise ValueError("N must be >= 1")
    if callable(getattr(f, "values", None)):
        return TruncatedSeries(f.values(N))
    return TruncatedSeries([f(n) for n in range(1, N + 1)])


class RationalFunction:
    """A(z)/B(z) in lowest terms with B monic and B(0) != 0."""

    __slots__ = ("numer", "denom")

    def __init__(self, numer, denom, reduced: bool = False):
        A = numer if isinstance(numer, UniPoly) else UniPoly(numer)
        B = denom if isinstance(denom, UniPoly) else UniPoly(denom)
        if B.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not reduced and not A.is_zero():
            g = poly_gcd(A, B)
            if g.degree > 0:
                A, B = A.exact_div(g), B.exact_div(g)
        if A.is_zero():
            B = UniPoly([1])
        if B[0].is_zero():
            raise ValueError("denominator vanishes at z = 0: not a power series")
        inv = B.lead.inverse()
        self.numer, self.denom = A * inv, B * inv

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numer == other.numer and self.denom == other.denom

    def __hash__(self):
        return hash((self.numer, self.denom))

    def __add__(self, other):
        return RationalFunction(self.numer * other.denom + other.numer * self.denom, self.denom * other.denom)

    def __mul__(self, other):
        return RationalFunction(self.numer * other.numer, self.denom * other.denom)

    def coefficients(self, N: int) -> list:
        """Power series coefficients c_0..c_{N-1}."""
        A, B = self.numer, self.denom
        if A.is_rational() and B.is_rational():
            return [Cyc.from_rational(x) for x in _expand_rational(A, B, N)]
        return _expand_cyclotomic(A, B, N)

    def series(self, N: int) -> TruncatedSeries:
        """f(1..N), asserting a zero constant term."""
        cs = self.coefficients(N + 1)
        if not cs[0].is_zero():
            raise ValueError("rational function has a nonzero constant term")
        return TruncatedSeries(cs[1:])

    def to_json(self) -> dict:
        return {"numer": self.numer.to_json(), "denom": self.denom.to_json()}

    @classmethod
    def from_json(cls, obj) -> "RationalFunction":
        return cls(UniPoly.from_json(obj["numer"]), UniPoly.from_json(obj["denom"]))

    def __repr__(self):
        return f"({self.numer!r}) / ({self.denom!r})"


def _expand_rational(A: UniPoly, B: UniPoly, N: int) -> list:
    den = lcm(*(c.denominator for c in A.coeffs + B.coeffs)) if (A.coeffs or B.coeffs) else 1
    a = [c.numerators[0] * (den // c.denominator) for c in A.coeffs]
    b = [c.numerators[0] * (den // c.denominator) for c in B.coeffs]
    b0 = b[0]
    taps = [(i, x) for i, x in enumerate(b) if i > 0 and x]
    out = []
    for n in range(N):
        acc = Fraction(a[n]) if n < len(a) else Fraction(0)
        for i, x in taps:
            if i > n:
                break
            acc -= x * out[n - i]
        out.append(acc / b0)
    return out


def _norm_factor(B: UniPoly, L: int) -> UniPoly:
    """Product of the nontrivial Galois conjugates of B over Q(zeta_L)."""
    H = UniPoly([1])
    for k in range(2, L):
        if gcd(k, L) == 1:
            H = H * B.galois(k)
    return H


def _expand_cyclotomic(A: UniPoly, B: UniPoly, N: int) -> list:
    # make the denominator rational, then expand each power-basis coordinate over Z
    L = lcm(1, *(c.order for c in A.coeffs + B.coeffs))
    if not B.is_rational():
        H = _norm_factor(B, lcm(1, *(c.order for c in B.coeffs)))
        A, B = A * H, B * H
    den = lcm(1, *(c.denominator for c in A.coeffs))
    width = euler_phi(L)
    cols = [[0] * len(A.coeffs) for _ in range(width)]
    for n, c in enumerate(A.coeffs):
        for i, x in enumerate(c.lift(L)):
            cols[i][n] = x * (den // c.denominator)
    bden = lcm(1, *(c.denominator for c in B.coeffs))
    b = [c.numerators[0] * (bden // c.denominator) for c in B.coeffs]
    series = [_expand_int(col, b, bden, N) for col in cols]
    return [Cyc.make(L, [s[n] / den for s in series]) for n in range(N)]


def _expand_int(a: list, b: list, bden: int, N: int) -> list:
    """Coefficients of (a / (b / bden)) as Fractions, integer arithmetic when b[0] is a unit."""
    b0 = b[0]
    taps = [(i, x) for i, x in enumerate(b) if i > 0 and x]
    out = []
    if abs(b0) == 1:
        for n in range(N):
            acc = a[n] * bden if n < len(a) else 0
            for i, x in taps:
                if i > n:
                    break
                acc -= x * out[n - i]
            out.append(acc * b0)
        return [Fraction(v) for v in out]
    for n in range(N):
        acc = Fraction(a[n] * bden) if n < len(a) else Fraction(0)
        for i, x in taps:
            if i > n:
                break
            acc -= x * out[n - i]
        out.append(acc / b0)
    return out
