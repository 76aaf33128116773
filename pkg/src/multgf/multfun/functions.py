"""Multiplicative functions given by their values on prime powers."""
from __future__ import annotations

import threading
from math import gcd
from typing import Callable, Optional, Sequence

from ..exactnum import ONE, ZERO, Cyc, cyc
from .arith import factor_table, factorize


class MultiplicativeFunction:
    """f(n) = prod rule(p, e) over n = prod p^e; f(1) = 1 by construction.

    ``rule`` receives a prime and an exponent >= 1 and returns anything
    ``cyc`` accepts.  Computed values are memoized.
    """

    def __init__(self, rule: Callable[[int, int], object], name: str = "f", params: Optional[dict] = None):
        self.rule = rule
        self.name = name
        self.params = dict(params or {})
        self._pp: dict = {}
        self._vals: dict = {1: ONE}
        self._lock = threading.Lock()

    def at_prime_power(self, p: int, e: int) -> Cyc:
        key = (p, e)
        v = self._pp.get(key)
        if v is None:
            v = cyc(self.rule(p, e))
            self._pp[key] = v
        return v

    def _from_factors(self, fac: dict) -> Cyc:
        acc = ONE
        for p, e in fac.items():
            v = self.at_prime_power(p, e)
            if v.is_zero():
                return ZERO
            acc = acc * v
        return acc

    def __call__(self, n: int) -> Cyc:
        if n < 1:
            raise ValueError(f"multiplicative functions are defined on n >= 1, got {n}")
        v = self._vals.get(n)
        if v is None:
            v = self._from_factors(factorize(n))
            with self._lock:
                self._vals[n] = v
        return v

    def values(self, N: int) -> list:
        """[f(1), ..., f(N)] as a 0-indexed list (entry i is f(i+1))."""
        missing = [n for n in range(1, N + 1) if n not in self._vals]
        if missing:
            table = factor_table(N)
            fresh = {n: self._from_factors(table[n]) for n in missing}
            with self._lock:
                self._vals.update(fresh)
        return [self._vals[n] for n in range(1, N + 1)]

    def __repr__(self):
        return f"MultiplicativeFunction({self.name})"


def mf_eval(f: MultiplicativeFunction, n: int) -> Cyc:
    return f(n)


_BUILTIN_RULES = {
    "phi": lambda p, e: p ** (e - 1) * (p - 1),
    "tau": lambda p, e: e + 1,
    "sigma": lambda p, e: (p ** (e + 1) - 1) // (p - 1),
    "mu": lambda p, e: -1 if e == 1 else 0,
    "liouville": lambda p, e: (-1) ** e,
    "rho": lambda p, e: 2,
    "tau_sq": lambda p, e: (e + 1) ** 2,
    "tau_of_square": lambda p, e: 2 * e + 1,
    "one": lambda p, e: 1,
    "point_support": lambda p, e: 0,
}

BUILTIN_NAMES = tuple(_BUILTIN_RULES) + ("n_pow_k",)


def mf_builtin(name: str, k: int = 1) -> MultiplicativeFunction:
    """Standard functions by name; ``n_pow_k`` takes the exponent ``k``."""
    if name == "n_pow_k":
        if k >= 0:
            return MultiplicativeFunction(lambda p, e: p ** (e * k), f"n^{k}", {"k": k})
        from fractions import Fraction

        return MultiplicativeFunction(lambda p, e: Fraction(1, p ** (-e * k)), f"n^{k}", {"k": k})
    try:
        rule = _BUILTIN_RULES[name]
    except KeyError:
        raise KeyError(f"unknown builtin function {name!r}; known: {', '.join(BUILTIN_NAMES)}") from None
    return MultiplicativeFunction(rule, name)


def prime_power_table(entries: dict, default: str = "one", name: str = "table") -> MultiplicativeFunction:
    """Function given by explicit {(p, e): value}; other prime powers map to 1 or 0."""
    if default not in ("one", "zero"):
        raise ValueError("default must be 'one' or 'zero'")
    table = {k: cyc(v) for k, v in entries.items()}
    fallback = ONE if default == "one" else ZERO
    return MultiplicativeFunction(lambda p, e: table.get((p, e), fallback), name)


def _as_mf(f) -> MultiplicativeFunction:
    # periodic functions and n^k chi(n) forms carry their own conversion
    return f if isinstance(f, MultiplicativeFunction) else f.as_function()


def mf_pointwise_product(f, g) -> MultiplicativeFunction:
    f, g = _as_mf(f), _as_mf(g)
    return MultiplicativeFunction(
        lambda p, e: f.at_prime_power(p, e) * g.at_prime_power(p, e), f"({f.name}*{g.name})"
    )


def mf_conjugate(f) -> MultiplicativeFunction:
    """Complex conjugate, i.e. zeta -> zeta^-1 applied to every value."""
    f = _as_mf(f)
    return MultiplicativeFunction(lambda p, e: f.at_prime_power(p, e).conjugate(), f"conj({f.name})")


def mf_is_multiplicative_scan(values: Sequence, complete: bool = False):
    """None if the table (values[0] = f(1)) is multiplicative, else the least bad pair (a, b).

    Pairs are a <= b with gcd(a, b) = 1 (any a, b when ``complete``), ordered
    lexicographically, with a, b >= 2.  A bad f(1) is reported as (1, 1) only
    when no such pair fails.
    """
    vals = [cyc(v) for v in values]
    N = len(vals)
    if N < 1:
        raise ValueError("need at least f(1)")
    for a in range(2, N + 1):
        if a * a > N:
            break
        fa = vals[a - 1]
        for b in range(a, N // a + 1):
            if not complete and gcd(a, b) != 1:
                continue
            if vals[a * b - 1] != fa * vals[b - 1]:
                return (a, b)
    return None if vals[0].is_one() else (1, 1)
