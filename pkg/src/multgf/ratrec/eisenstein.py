"""Constructive Eisenstein denominator: c with c^n f(n) integral for all n."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, lcm

from ..errors import ContractViolation, InsufficientPrefixError, NotARootError
from ..exactnum import ONE, ZERO, Cyc, cyc
from .series import TruncatedSeries


@dataclass
class EisensteinReport:
    c: Cyc
    n: list            # n_1..n_r
    m: int
    a: Cyc
    b: int
    checked_upto: int
    smaller_valid: list = field(default_factory=list)   # diagnostic only

    def to_json(self) -> dict:
        return {
            "c": self.c.to_json(), "n": self.n, "m": self.m, "a": self.a.to_json(), "b": self.b,
            "checked_upto": self.checked_upto, "smaller_valid": self.smaller_valid,
        }


def _mul_trunc(x, y, T):
    out = [ZERO] * T
    for i, a in enumerate(x[:T]):
        if a.is_zero():
            continue
        for j in range(min(len(y), T - i)):
            b = y[j]
            if not b.is_zero():
                out[i + j] = out[i + j] + a * b
    return out


def _shifted_polys(polys, series, T):
    """F_j (or T_j) truncated to T: sum_{i>=j} binom(i, j) P_i(z) S(z)^{i-j}, j = 0..r."""
    r = len(polys) - 1
    pows = [[ONE] + [ZERO] * (T - 1)]
    for _ in range(r):
        pows.append(_mul_trunc(pows[-1], series, T))
    out = []
    for j in range(r + 1):
        acc = [ZERO] * T
        for i in range(j, r + 1):
            term = _mul_trunc(list(polys[i].coeffs), pows[i - j], T)
            b = comb(i, j)
            acc = [x + y * b for x, y in zip(acc, term)]
        out.append(acc)
    return out


def _integral_equation(eq):
    """Scale P so that every coefficient is an algebraic integer in the power basis."""
    den = 1
    for p in eq.coeffs:
        for c in p.coeffs:
            den = lcm(den, c.denominator)
    return [p * den for p in eq.coeffs]


def eisenstein_denominator(eq, s: TruncatedSeries, constant_term=0) -> EisensteinReport:
    """Denominator c of the branch whose coefficients are ``constant_term``, f(1), f(2), ...

    A nonzero constant term is first moved into the equation (y -> y + u_0)
    so that the series starts at z^1.  The construction: n_j = order of
    F_j = sum_i binom(i, j) P_i F^{i-j}; the least m > max n_j for which the
    z^{n_j} coefficient of T_j (F replaced by its degree-m truncation) is
    nonzero; a = that coefficient for j = 1; b = common denominator of
    f(1..m); c = a b.
    """
    u0 = cyc(constant_term)
    if not u0.is_zero():
        eq = eq.substitute_shift(u0)
    polys = _integral_equation(eq)
    f = list(s.coeffs)
    L = len(f)
    T = L + 1
    full = [ZERO] + f
    Fj = _shifted_polys(polys, full, T)
    for k, v in enumerate(Fj[0]):
        if not v.is_zero():
            raise NotARootError(f"series does not satisfy the equation: coefficient of z^{k} is nonzero")
    r = len(polys) - 1
    n = []
    for j in range(1, r + 1):
        nj = next((k for k, v in enumerate(Fj[j]) if not v.is_zero()), None)
        if nj is None:
            raise InsufficientPrefixError(f"F_{j} vanishes on all {L} known coefficients")
        n.append(nj)
    cap = (4 * L) // 5
    m = None
    for cand in range(max(n) + 1, cap + 1):
        Q = [ZERO] + f[:cand]
        Tj = _shifted_polys(polys, Q, max(n) + 1)
        if all(not Tj[j][n[j - 1]].is_zero() for j in range(1, r + 1)):
            m = cand
            a = Tj[1][n[0]]
            break
    if m is None:
        raise InsufficientPrefixError(f"no admissible m up to the scan cap {cap}; supply more terms")
    b = lcm(1, *(v.denominator for v in f[:m]))
    c = a * b
    _check(c, f)
    smaller = []
    if c.is_rational() and c.to_fraction().denominator == 1:
        cv = abs(int(c.to_fraction()))
        for dvs in range(1, cv):
            if cv % dvs == 0 and _passes(Cyc.from_rational(dvs), f):
                smaller.append(dvs)
    return EisensteinReport(c, n, m, a, b, L, smaller)


def _passes(c, f) -> bool:
    pw = ONE
    for v in f:
        pw = pw * c
        if not (pw * v).is_integral():
            return False
    return True


def _check(c, f):
    if c.is_zero() or not _passes(c, f):
        raise ContractViolation("c^n f(n) is not integral on the supplied range")
