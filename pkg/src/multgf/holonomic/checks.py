"""Checks tying recurrences back to multiplicative structure."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, gcd
from typing import Callable, Optional

from ..errors import CoprimalityError
from ..exactnum import cyc
from ..multfun.arith import primes_up_to
from .recurrence import PRecurrence


def bezivin_shift_check(f: Callable, rec: PRecurrence, q: int, upto: int) -> Optional[int]:
    """Least n in (valid_from, upto] with f(n q) != f(n) f(q), or None.

    Requires gcd(q, (2 d + 1)!) = 1 where d is the recurrence order.
    """
    if q < 1:
        raise ValueError("q must be positive")
    bound = factorial(2 * rec.order + 1)
    if gcd(q, bound) != 1:
        raise CoprimalityError(f"q = {q} shares a factor with (2*{rec.order}+1)! = {bound}")
    fq = cyc(f(q))
    for n in range(rec.valid_from + 1, upto + 1):
        if cyc(f(n * q)) != cyc(f(n)) * fq:
            return n
    return None


@dataclass
class NonvanishingReport:
    zeros: list = field(default_factory=list)
    threshold: Optional[int] = None   # least prime above which no zero was seen
    prime_bound: int = 0
    exp_bound: int = 0


def nonvanishing_scan(f: Callable, prime_bound: int, exp_bound: int) -> NonvanishingReport:
    """All (p, k) with p <= prime_bound, k <= exp_bound and f(p^k) = 0."""
    if prime_bound < 1 or exp_bound < 1:
        raise ValueError("bounds must be >= 1")
    primes = primes_up_to(prime_bound)
    zeros = []
    last_bad = None
    for p in primes:
        for k in range(1, exp_bound + 1):
            if cyc(f(p**k)).is_zero():
                zeros.append((p, k))
                last_bad = p
    if last_bad is None:
        threshold = primes[0] if primes else None
    else:
        later = [p for p in primes if p > last_bad]
        threshold = later[0] if later else None
    return NonvanishingReport(zeros, threshold, prime_bound, exp_bound)
