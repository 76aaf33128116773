"""Polynomial gcd over Q(zeta_m) by reduction modulo split primes.

For a prime p = 1 (mod m) the field Q(zeta_m) has phi(m) embeddings into
F_p, one for each primitive m-th root of unity there.  The monic gcd is
computed in F_p[z] under every embedding, the power-basis coordinates are
recovered by inverting the Vandermonde matrix of the roots, and the results
for several primes are combined by CRT and rational reconstruction.  The
candidate is accepted only when it divides both inputs exactly over
Q(zeta_m); a modular gcd of degree 0 at a prime not dividing either leading
coefficient already proves the inputs coprime.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm

import flint

from .cyclotomic import Cyc, euler_phi

_START = 1 << 62


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _split_primes(m):
    p = _START - (_START - 1) % m
    while p > m:
        if flint.fmpz(p).is_prime():
            yield p
        p -= m


def _primitive_root_of_unity(m, p):
    qs = _prime_factors(m)
    for g in range(2, p):
        r = pow(g, (p - 1) // m, p)
        if all(pow(r, m // q, p) != 1 for q in qs):
            return r
    raise ArithmeticError("no primitive root of unity")


def _ratrec(a, M):
    """r/s = a mod M with |r|, s <= sqrt(M/2), or None."""
    bound = isqrt(M // 2)
    r0, r1, s0, s1 = M, a % M, 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _integer_coords(P, m):
    den = lcm(1, *(c.denominator for c in P.coeffs))
    return [[x * (den // c.denominator) for x in c.lift(m)] for c in P.coeffs]


def cyclotomic_gcd(A, B, m):
    """Monic gcd of nonzero A, B whose coefficients lie in Q(zeta_m), m != 2 mod 4."""
    from .poly import UniPoly

    a, b = _integer_coords(A, m), _integer_coords(B, m)
    w = euler_phi(m)
    exps = [j for j in range(1, m + 1) if gcd(j, m) == 1]
    best, acc, modulus, previous = None, None, 1, None
    for p in _split_primes(m):
        r = _primitive_root_of_unity(m, p)
        roots = [pow(r, j, p) for j in exps]
        images = []
        for x in roots:
            pw = [pow(x, i, p) for i in range(w)]
            ia = flint.nmod_poly([sum(c * q for c, q in zip(row, pw)) % p for row in a], p)
            ib = flint.nmod_poly([sum(c * q for c, q in zip(row, pw)) % p for row in b], p)
            if ia.degree() != A.degree or ib.degree() != B.degree:
                images = None
                break
            images.append(ia.gcd(ib))
        if images is None:
            continue
        degs = {g.degree() for g in images}
        if len(degs) != 1:
            continue
        e = degs.pop()
        if e == 0:
            return UniPoly([1])
        if best is not None and e > best:
            continue
        if best is None or e < best:
            best, acc, modulus, previous = e, None, 1, None
        V = flint.nmod_mat(w, w, [pow(x, i, p) for x in roots for i in range(w)], p)
        Vi = V.inv()
        coords = []
        for n in range(e):
            vals = flint.nmod_mat(w, 1, [int(g.coeffs()[n]) for g in images], p)
            sol = Vi * vals
            coords.append([int(sol[i, 0]) for i in range(w)])
        if acc is None:
            acc = coords
        else:
            # CRT: x = acc mod modulus, x = coords mod p
            inv = pow(modulus, -1, p)
            acc = [[u + modulus * ((v - u) * inv % p) for u, v in zip(ru, rv)] for ru, rv in zip(acc, coords)]
        modulus *= p
        rec = []
        for row in acc:
            fr = [_ratrec(x, modulus) for x in row]
            if any(x is None for x in fr):
                rec = None
                break
            rec.append(fr)
        if rec is None:
            continue
        if rec == previous:
            G = UniPoly([Cyc.make(m, row) for row in rec] + [1])
            if divmod(A, G)[1].is_zero() and divmod(B, G)[1].is_zero():
                return G
        previous = rec
    raise ArithmeticError("modular gcd ran out of primes")
