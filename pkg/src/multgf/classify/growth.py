"""Desk-scale growth heuristics: nth roots and p-adic valuations of the coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

from ..exactnum import cyc, cyc_abs_interval
from ..exactnum.cyclotomic import _ivprec


@dataclass
class ArchGrowthReport:
    lower: float          # enclosure of max_{N/2 <= n <= N} |f(n)|^(1/n)
    upper: float
    delta: float
    flagged: bool         # lower > 1 + delta: coefficients too large for an algebraic series
    window: tuple

    def to_json(self) -> dict:
        return {"max_root": [repr(self.lower), repr(self.upper)], "delta": self.delta,
                "flagged": self.flagged, "window": list(self.window)}


def growth_check_arch(values, delta: float = 0.05, bits: int = 64) -> ArchGrowthReport:
    N = len(values)
    if N < 10:
        raise ValueError("need at least 10 values")
    lo = hi = 0.0
    with _ivprec(bits):
        for n in range(N // 2, N + 1):
            v = cyc(values[n - 1])
            if v.is_zero():
                continue
            a = cyc_abs_interval(v, bits)
            top = iv.exp(iv.log(iv.mpf(a.b)) / n)
            bottom = iv.exp(iv.log(iv.mpf(a.a)) / n).a if a.a > 0 else 0
            lo, hi = max(lo, float(bottom)), max(hi, float(top.b))
    return ArchGrowthReport(lo, hi, delta, lo > 1 + delta, (N // 2, N))


@dataclass
class PadicGrowthReport:
    p: int
    min_valuation: object     # None when every value is zero
    slope: object             # min over the upper half of v_p(f(n)) / n, as a Fraction
    flagged: bool             # minimum still dropping in the upper half

    def to_json(self) -> dict:
        return {"p": self.p, "min_valuation": self.min_valuation,
                "slope": None if self.slope is None else str(self.slope), "flagged": self.flagged}


def _vp(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def padic_valuation(x: Fraction, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    return _vp(abs(x.numerator), p) - _vp(x.denominator, p)


def growth_check_padic(values, p: int) -> PadicGrowthReport:
    from ..multfun.arith import is_prime

    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    N = len(values)
    vals = []
    for v in values:
        c = cyc(v)
        if not c.is_rational():
            raise ValueError("p-adic growth check takes rational values")
        vals.append(c.to_fraction())
    half = N // 2
    low = [padic_valuation(x, p) for x in vals[:half] if x]
    high = [(padic_valuation(x, p), n) for n, x in enumerate(vals[half:], start=half + 1) if x]
    allv = low + [v for v, _ in high]
    if not allv:
        return PadicGrowthReport(p, None, None, False)
    m = min(allv)
    slope = min((Fraction(v, n) for v, n in high), default=None)
    flagged = m < 0 and bool(high) and bool(low) and min(v for v, _ in high) < min(low)
    return PadicGrowthReport(p, m, slope, flagged)
