"""Integer helpers: sieve, factorization, primality, Euler phi."""
from __future__ import annotations

import threading
from math import gcd, isqrt

SIEVE_BOUND = 10**6

_spf: list = []
_spf_lock = threading.Lock()


def _smallest_prime_factors(limit: int) -> list:
    global _spf
    if len(_spf) > limit:
        return _spf
    with _spf_lock:
        if len(_spf) > limit:
            return _spf
        size = max(limit + 1, 2 * len(_spf), 1024)
        spf = list(range(size))
        for i in range(2, isqrt(size - 1) + 1):
            if spf[i] == i:
                for j in range(i * i, size, i):
                    if spf[j] == j:
                        spf[j] = i
        _spf = spf
    return _spf


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24, which covers every use here)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factorize(n: int, bound: int = SIEVE_BOUND) -> dict:
    """Prime factorization {p: e} of a positive integer."""
    if n < 1:
        raise ValueError(f"cannot factor {n}: argument must be positive")
    out: dict = {}
    if n <= bound:
        spf = _smallest_prime_factors(n)
        while n > 1:
            p = spf[n]
            n //= p
            out[p] = out.get(p, 0) + 1
        return out
    for p in (2, 3, 5):
        while n % p == 0:
            n //= p
            out[p] = out.get(p, 0) + 1
    f = 7
    step = 0
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    limit = min(isqrt(n), 10**5)
    while f <= limit and n > 1:
        while n % f == 0:
            n //= f
            out[f] = out.get(f, 0) + 1
        f += wheel[step]
        step = (step + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
        else:
            d = _pollard_rho(m)
            stack += [d, m // d]
    return dict(sorted(out.items()))


def factor_table(N: int) -> list:
    """Factorizations of 1..N as a list indexed by n (entry 0 unused)."""
    spf = _smallest_prime_factors(N)
    table = [None, {}]
    for n in range(2, N + 1):
        p = spf[n]
        prev = table[n // p]
        d = dict(prev)
        d[p] = d.get(p, 0) + 1
        table.append(d)
    return table


def primes_up_to(N: int) -> list:
    spf = _smallest_prime_factors(max(N, 2))
    return [p for p in range(2, N + 1) if spf[p] == p]


def totient(n: int) -> int:
    r = n
    for p in factorize(n):
        r = r // p * (p - 1)
    return r
