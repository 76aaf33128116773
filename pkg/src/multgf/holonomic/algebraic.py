"""Algebraic power series: branch expansion and conversion to recurrences.

An equation P(z, y) = sum_i P_i(z) y^i is stored by its coefficient
polynomials in z.  A branch is fixed by a prefix u_0, u_1, ... of its
coefficients; the sequence handed to the recurrence side is f(n) = u_n, n >= 1.
"""
from __future__ import annotations

from math import comb
from typing import Sequence

from ..errors import InsufficientPrefixError, NotARootError, StructuralError
from ..exactnum import ONE, ZERO, UniPoly, cyc, poly_gcd
from .. import linalg
from .recurrence import PRecurrence, finalize


class AlgebraicEquation:
    """P(z, y) = sum_{i=0}^{r} coeffs[i](z) * y^i with r >= 1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [c if isinstance(c, UniPoly) else UniPoly(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        if len(cs) < 2:
            raise StructuralError("an algebraic equation needs degree >= 1 in y")
        self.coeffs = tuple(cs)

    @property
    def degree_y(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree_z(self) -> int:
        return max(c.degree for c in self.coeffs)

    def derivative_y(self) -> "list[UniPoly]":
        return [c * i for i, c in enumerate(self.coeffs)][1:]

    def derivative_z(self) -> "list[UniPoly]":
        return [c.derivative() for c in self.coeffs]

    def substitute_shift(self, c) -> "AlgebraicEquation":
        """Equation satisfied by y - c, i.e. P(z, y + c)."""
        c = cyc(c)
        r = self.degree_y
        out = [UniPoly() for _ in range(r + 1)]
        for i, p in enumerate(self.coeffs):
            for j in range(i + 1):
                out[j] = out[j] + p * (comb(i, j) * c ** (i - j))
        return AlgebraicEquation(out)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> "AlgebraicEquation":
        return cls([UniPoly.from_json(c) for c in obj])

    def __repr__(self):
        return " + ".join(f"({c!r})*y^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero())


def _eval_series(polys, pows, m):
    """[z^m] sum_i polys[i](z) * pows[i](z)."""
    acc = ZERO
    for p, s in zip(polys, pows):
        for t, a in enumerate(p.coeffs):
            if t > m:
                break
            b = s[m - t]
            if not a.is_zero() and not b.is_zero():
                acc = acc + a * b
    return acc


def _powers(y, r, T):
    pows = [[ONE] + [ZERO] * (T - 1)]
    for _ in range(r):
        prev = pows[-1]
        nxt = [ZERO] * T
        for i, a in enumerate(prev):
            if a.is_zero():
                continue
            for j in range(T - i):
                b = y[j]
                if not b.is_zero():
                    nxt[i + j] = nxt[i + j] + a * b
        pows.append(nxt)
    return pows


def branch_data(eq: AlgebraicEquation, prefix: Sequence):
    """Validate a branch prefix; returns (u, n1, pivot) for the expansion."""
    u = [cyc(v) for v in prefix]
    L = len(u)
    if L == 0:
        raise InsufficientPrefixError("empty prefix")
    r = eq.degree_y
    Py = eq.derivative_y()
    pows = _powers(u + [ZERO] * (L + 1), r, 2 * L + 1)
    n1 = None
    for m in range(L):
        if not _eval_series(Py, pows, m).is_zero():
            n1 = m
            break
    if n1 is None:
        raise InsufficientPrefixError(
            f"prefix of length {L} does not separate the branch: dP/dy vanishes to order >= {L}"
        )
    pivot = _eval_series(Py, pows, n1)
    for m in range(L + n1):
        if not _eval_series(eq.coeffs, pows, m).is_zero():
            raise NotARootError(f"prefix does not satisfy the equation: coefficient of z^{m} is nonzero")
    return u, n1, pivot


def algebraic_series(eq: AlgebraicEquation, prefix: Sequence, N: int) -> list:
    """Coefficients u_0..u_{N-1} of the unique branch extending ``prefix``."""
    u, n1, pivot = branch_data(eq, prefix)
    L = len(u)
    if N <= L:
        return u[:N]
    r = eq.degree_y
    T = N + n1 + 1
    y = u + [ZERO] * (T - L)
    pows = _powers(y, r, T)
    inv = pivot.inverse()
    for n in range(L, N):
        c = -_eval_series(eq.coeffs, pows, n + n1) * inv
        y[n] = c
        if c.is_zero():
            continue
        # (y + c z^n)^i = sum_j binom(i, j) c^j z^{nj} y^{i-j}
        old = [list(p) for p in pows]
        cp = [ONE]
        for _ in range(r):
            cp.append(cp[-1] * c)
        for i in range(1, r + 1):
            tgt = pows[i]
            for j in range(1, i + 1):
                shift = n * j
                if shift >= T:
                    break
                coef = cp[j] * comb(i, j)
                src = old[i - j]
                for t in range(T - shift):
                    b = src[t]
                    if not b.is_zero():
                        tgt[t + shift] = tgt[t + shift] + coef * b
    return y[:N]


# -- function field arithmetic -------------------------------------------

class _RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        num = num if isinstance(num, UniPoly) else UniPoly([num])
        den = UniPoly([1]) if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        if num.is_zero():
            den = UniPoly([1])
        lc = den.lead
        if not lc.is_one():
            inv = lc.inverse()
            num, den = num * inv, den * inv
        self.num, self.den = num, den

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, o):
        o = _rf(o)
        if self.den == o.den:
            return _RatFunc(self.num + o.num, self.den)
        return _RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return _RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, o):
        return self + (-_rf(o))

    def __rsub__(self, o):
        return _rf(o) - self

    def __mul__(self, o):
        o = _rf(o)
        if self.is_zero() or o.is_zero():
            return _RatFunc(UniPoly())
        return _RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return _RatFunc(self.den, self.num)

    def __truediv__(self, o):
        return self * _rf(o).inverse()

    def __rtruediv__(self, o):
        return _rf(o) * self.inverse()

    def derivative(self):
        return _RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den)

    def __eq__(self, o):
        o = _rf(o)
        return self.num == o.num and self.den == o.den


def _rf(x):
    if isinstance(x, _RatFunc):
        return x
    if isinstance(x, UniPoly):
        return _RatFunc(x)
    return _RatFunc(UniPoly([x]), reduce=False)


class _FieldElts:
    """Arithmetic in K(z)[y]/(P) on coefficient vectors of length r."""

    def __init__(self, polys):
        self.r = len(polys) - 1
        lead = _rf(polys[-1])
        self.monic = [_rf(p) / lead for p in polys]

    def reduce(self, v):
        v = list(v)
        r = self.r
        for k in range(len(v) - 1, r - 1, -1):
            c = v[k]
            if c.is_zero():
                continue
            for i in range(r + 1):
                v[k - r + i] = v[k - r + i] - c * self.monic[i]
        v = v[:r]
        return v + [_rf(0)] * (r - len(v))

    def mul(self, a, b):
        out = [_rf(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return self.reduce(out)

    def inverse(self, a):
        """Inverse of a modulo P by the extended Euclidean algorithm over K(z)."""
        def trim(p):
            p = list(p)
            while p and p[-1].is_zero():
                p.pop()
            return p

        def divmod_(p, q):
            p = list(p)
            quo = [_rf(0)] * max(len(p) - len(q) + 1, 1)
            inv = q[-1].inverse()
            for k in range(len(p) - len(q), -1, -1):
                c = p[k + len(q) - 1] * inv
                quo[k] = c
                if not c.is_zero():
                    for i, x in enumerate(q):
                        p[k + i] = p[k + i] - c * x
            return quo, trim(p[: len(q) - 1])

        def sub(p, q):
            n = max(len(p), len(q))
            p = p + [_rf(0)] * (n - len(p))
            q = q + [_rf(0)] * (n - len(q))
            return trim([x - y for x, y in zip(p, q)])

        def mulp(p, q):
            if not p or not q:
                return []
            out = [_rf(0)] * (len(p) + len(q) - 1)
            for i, x in enumerate(p):
                for j, y in enumerate(q):
                    out[i + j] = out[i + j] + x * y
            return trim(out)

        r0, r1 = trim(self.monic), trim(a)
        s0, s1 = [], [_rf(1)]
        while len(r1) > 1:
            q, rem = divmod_(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, sub(s0, mulp(q, s1))
            if not r1:
                raise ZeroDivisionError("element is not invertible modulo P")
        if not r1:
            raise ZeroDivisionError("element is not invertible modulo P")
        inv = r1[0].inverse()
        return self.reduce([c * inv for c in s1] or [_rf(0)])


def _squarefree(eq: AlgebraicEquation) -> AlgebraicEquation:
    """Drop repeated factors in y (over K(z)) so that dP/dy is a unit mod P."""
    polys = list(eq.coeffs)
    dy = eq.derivative_y()
    # gcd over K(z)[y]
    a = [_rf(p) for p in polys]
    b = [_rf(p) for p in dy]

    def trim(p):
        while p and p[-1].is_zero():
            p.pop()
        return p

    a, b = trim(a), trim(b)
    while b:
        inv = b[-1].inverse()
        rem = list(a)
        for k in range(len(rem) - len(b), -1, -1):
            c = rem[k + len(b) - 1] * inv
            if not c.is_zero():
                for i, x in enumerate(b):
                    rem[k + i] = rem[k + i] - c * x
        a, b = b, trim(rem[: len(b) - 1])
    if len(a) <= 1:
        return eq
    # divide P by the gcd, then clear denominators
    g = a
    q = [_rf(0)] * (len(polys) - len(g) + 1)
    rem = [_rf(p) for p in polys]
    inv = g[-1].inverse()
    for k in range(len(rem) - len(g), -1, -1):
        c = rem[k + len(g) - 1] * inv
        q[k] = c
        if not c.is_zero():
            for i, x in enumerate(g):
                rem[k + i] = rem[k + i] - c * x
    return AlgebraicEquation(_clear_denominators(q))


def _clear_denominators(rfs):
    den = UniPoly([1])
    for x in rfs:
        g = poly_gcd(den, x.den)
        den = den * x.den.exact_div(g)
    return [x.num * den.exact_div(x.den) for x in rfs]


def differential_relation(eq: AlgebraicEquation):
    """Polynomials (c_{-1}, c_0, ..., c_k) with c_{-1} + sum_j c_j y^{(j)} = 0, k minimal."""
    eq = _squarefree(eq)
    F = _FieldElts(eq.coeffs)
    r = F.r
    one = [_rf(1)] + [_rf(0)] * (r - 1)
    if r == 1:
        y = [-_rf(eq.coeffs[0]) / _rf(eq.coeffs[1])]
    else:
        y = [_rf(0), _rf(1)] + [_rf(0)] * (r - 2)
    Py = F.reduce([_rf(p) for p in eq.derivative_y()] or [_rf(0)])
    Pz = F.reduce([_rf(p) for p in eq.derivative_z()])
    yprime = [-x for x in F.mul(Pz, F.inverse(Py))] if r > 1 else [y[0].derivative()]

    def deriv(v):
        out = [c.derivative() for c in v]
        if r > 1:
            # d/dz of y^i contributes i y^{i-1} y'
            dpart = [_rf(0)] * r
            for i in range(1, r):
                if not v[i].is_zero():
                    dpart[i - 1] = dpart[i - 1] + v[i] * i
            out = [a + b for a, b in zip(out, F.mul(dpart, yprime))]
        return out

    cols = [one, y]
    while True:
        k = len(cols) - 2
        rows = [[cols[c][i] for c in range(len(cols))] for i in range(r)]
        basis = linalg.nullspace(rows, len(cols), _rf(0), _rf(1))
        for vec in basis:
            if not vec[-1].is_zero():
                return _clear_denominators(vec)
        if k > r + 1:
            raise RuntimeError("no differential relation found")
        cols.append(deriv(cols[-1]))


def _falling(x_shift: int, j: int) -> UniPoly:
    """ff(n - x_shift, j) = (n - x_shift)(n - x_shift - 1)...(n - x_shift - j + 1) as a polynomial in n."""
    p = UniPoly([1])
    for t in range(j):
        p = p * UniPoly([-(x_shift + t), 1])
    return p


def algebraic_to_recurrence(eq: AlgebraicEquation, series_prefix: Sequence) -> PRecurrence:
    """Recurrence for f(n) = [z^n] y(z), n >= 1, on the branch fixed by the prefix."""
    branch_data(eq, series_prefix)
    rel = differential_relation(eq)
    inhom, cs = rel[0], rel[1:]
    pairs = [(j, a, c) for j, p in enumerate(cs) for a, c in enumerate(p.coeffs) if not c.is_zero()]
    s = max(j - a for j, a, _ in pairs)
    smin = min(j - a for j, a, _ in pairs)
    d = s - smin
    P = [UniPoly() for _ in range(d + 1)]
    for j, a, c in pairs:
        i = s - (j - a)
        P[i] = P[i] + _falling(i, j) * c
    # [z^N] relation holds for N > deg(inhom); N = n - s
    n_low = s + (inhom.degree if not inhom.is_zero() else -1)
    min_valid = max(d, n_low)
    need = min_valid + 4 * (d + 1) + 40
    terms = algebraic_series(eq, series_prefix, need + 1)[1:]
    rec = finalize(_primitive(P), terms, min_valid)
    return rec


def _primitive(polys):
    if not all(p.is_rational() for p in polys):
        return polys
    from fractions import Fraction
    from math import gcd, lcm

    den = lcm(*(c.denominator for p in polys for c in p.coeffs))
    ints = [[c.numerators[0] * (den // c.denominator) for c in p.coeffs] for p in polys]
    g = 0
    for cs in ints:
        for x in cs:
            g = gcd(g, x)
    if ints[0] and ints[0][-1] < 0:
        g = -g
    return [UniPoly([Fraction(x, g) for x in cs]) for cs in ints]
